#pragma once

#include <atomic>
#include <cstdint>
#include <utility>
#include <vector>

#include "ising/graph.hpp"

namespace ising {

using Spin = std::int8_t; // -1 or +1

// One candidate partition: spins[i] == +1 puts node i in the first part.
using SpinState = std::vector<Spin>;

// Throws domain_error unless every entry is exactly -1/+1 and the length
// matches num_nodes.
void validate_spin_state(const SpinState& state, std::int32_t num_nodes);

std::int64_t spin_sum(const SpinState& state);

// Exact rational coefficient pair A = a_num/denom, B = b_num/denom. Energies
// are computed in integer "scaled" units of 1/denom, so identities hold
// bit-exactly; with integer A and B, denom is 1 and scaled units equal
// energy units.
struct Coefficients {
  std::int64_t a_num = 1;
  std::int64_t b_num = 1;
  std::int64_t denom = 1;

  double a() const { return static_cast<double>(a_num) / static_cast<double>(denom); }
  double b() const { return static_cast<double>(b_num) / static_cast<double>(denom); }
};

// Shared balance counter G = sum sigma_i. Workers fold one atomic add per
// spin change into it, so it equals the exact spin sum at every sweep
// barrier no matter how updates interleave.
class BalanceCounter {
public:
  explicit BalanceCounter(std::int64_t initial = 0) : value_(initial) {}

  std::int64_t value() const { return value_.load(std::memory_order_relaxed); }
  void add(std::int64_t delta) { value_.fetch_add(delta, std::memory_order_relaxed); }
  void reset(std::int64_t value) { value_.store(value, std::memory_order_relaxed); }

private:
  std::atomic<std::int64_t> value_;
};

// Coefficient rule A/B >= min(2*max_degree, N) / 8, met with equality:
// B = b, A = b * min(2*max_degree, N) / 8. b is b_num/b_den > 0.
Coefficients coefficients_for(const Graph& g, std::int64_t b_num = 1,
                              std::int64_t b_den = 1);

// Coefficients the solve paths default to (A=1, B=4). Deliberately below the
// coefficients_for rule: the rule guarantees ground-state balance but makes
// the local update balance-dominated, which measurably degrades cut quality;
// A/B = 1/4 keeps every accepted move a true Hamiltonian descent while the
// balance term still pins |sum sigma| to the parity floor by the end of a run.
Coefficients solver_default_coefficients();

// Min-cut problem instance: graph plus H = A*(sum sigma)^2 + B*cut and an
// all-zero external field.
class MinCutProblem {
public:
  // Enforces the coefficient rule (throws config_error when A/B is below
  // min(2*max_degree, N)/8) and the all-zero external field.
  static MinCutProblem make(Graph graph, Coefficients coeffs,
                            std::vector<std::int64_t> external_field = {});

  // Explicit opt-out of the coefficient rule. Field must still be all-zero.
  static MinCutProblem make_unchecked(Graph graph, Coefficients coeffs,
                                      std::vector<std::int64_t> external_field = {});

  // Solve-path default: make_unchecked(graph, solver_default_coefficients()).
  static MinCutProblem with_default_coefficients(Graph graph);

  const Graph& graph() const { return graph_; }
  const Coefficients& coefficients() const { return coeffs_; }
  std::int64_t external_field(std::int32_t i) const {
    return external_field_.empty() ? 0 : external_field_[i];
  }

  // True when coeffs satisfy the coefficients_for rule for this graph.
  bool satisfies_coefficient_rule() const;

private:
  MinCutProblem(Graph graph, Coefficients coeffs,
                std::vector<std::int64_t> external_field)
      : graph_(std::move(graph)), coeffs_(coeffs),
        external_field_(std::move(external_field)) {}

  Graph graph_;
  Coefficients coeffs_;
  std::vector<std::int64_t> external_field_; // empty means all-zero
};

// Local field S = sum_j J_ij sigma_j + h_i with J_ij = (B/2) w_ij over graph
// neighbors. S > 0 favors +1, S < 0 favors -1, S == 0 is free.
double local_field(const MinCutProblem& problem, const SpinState& state,
                   std::int32_t i);

// Candidate energies for node i at sigma_i = -1 and +1, in scaled units:
//   E(s) = A*(balance_excl + s)^2 + B * sum_j w_ij * (1 - s*sigma_j)/2
// where balance_excl is the spin sum excluding node i.
struct CandidateEnergies {
  std::int64_t at_minus_scaled;
  std::int64_t at_plus_scaled;
  std::int64_t denom;

  double at_minus() const { return static_cast<double>(at_minus_scaled) / static_cast<double>(denom); }
  double at_plus() const { return static_cast<double>(at_plus_scaled) / static_cast<double>(denom); }
};

CandidateEnergies candidate_energies_mincut(const MinCutProblem& problem,
                                            const SpinState& state,
                                            std::int64_t balance_excl,
                                            std::int32_t i);

// A*(sum sigma)^2 + B*cut, each edge counted once. Scaled-unit variant is
// exact; the double variant divides by denom.
std::int64_t global_hamiltonian_scaled(const MinCutProblem& problem,
                                       const SpinState& state);
double global_hamiltonian(const MinCutProblem& problem, const SpinState& state);

} // namespace ising
