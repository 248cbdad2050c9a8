#pragma once

#include <cstdint>

#include "ising/model.hpp"

namespace ising {

struct PartitionScore {
  std::int64_t cut;           // sum of crossing-edge weights
  std::int64_t imbalance;     // | |V1| - |V2| | = |sum sigma|
  std::int64_t hamiltonian_scaled;
  double hamiltonian;
};

// Sum over edges (u,v,w) of w * [sigma_u != sigma_v], each edge once.
std::int64_t cut_value(const Graph& g, const SpinState& state);

// |sum sigma|.
std::int64_t imbalance(const SpinState& state);

PartitionScore score(const MinCutProblem& problem, const SpinState& state);

struct OracleResult {
  std::int64_t cut;
  SpinState witness;
};

// Exact minimum cut over all states with imbalance <= max_imbalance,
// enumerating only feasible part sizes with sigma_0 fixed to +1 (negation
// symmetry). Guard: N <= 24. Ties break to the lexicographically smallest
// witness (-1 before +1).
OracleResult brute_force_balanced_mincut(const Graph& g,
                                         std::int64_t max_imbalance);

inline constexpr std::int32_t kOracleMaxNodes = 24;

} // namespace ising
