#include "ising/model.hpp"

#include <numeric>

#include "ising/errors.hpp"

namespace ising {

void validate_spin_state(const SpinState& state, std::int32_t num_nodes) {
  if (static_cast<std::int64_t>(state.size()) != num_nodes)
    throw domain_error("spin state length does not match node count");
  for (Spin s : state)
    if (s != -1 && s != 1) throw domain_error("spin must be -1 or +1");
}

std::int64_t spin_sum(const SpinState& state) {
  std::int64_t sum = 0;
  for (Spin s : state) sum += s;
  return sum;
}

namespace {

Coefficients reduced(std::int64_t a_num, std::int64_t b_num, std::int64_t denom) {
  std::int64_t g = std::gcd(std::gcd(a_num, b_num), denom);
  if (g > 1) {
    a_num /= g;
    b_num /= g;
    denom /= g;
  }
  return {a_num, b_num, denom};
}

} // namespace

Coefficients coefficients_for(const Graph& g, std::int64_t b_num,
                              std::int64_t b_den) {
  if (b_num <= 0 || b_den <= 0) throw config_error("b must be positive");
  const std::int64_t k =
      std::min<std::int64_t>(2 * static_cast<std::int64_t>(g.max_degree()),
                             g.num_nodes());
  // A = b*k/8, B = b, common denominator 8*b_den.
  return reduced(b_num * k, 8 * b_num, 8 * b_den);
}

Coefficients solver_default_coefficients() { return {1, 4, 1}; }

namespace {

void check_field(const std::vector<std::int64_t>& field, std::int32_t n) {
  if (field.empty()) return;
  if (static_cast<std::int64_t>(field.size()) != n)
    throw config_error("external field length does not match node count");
  for (std::int64_t h : field)
    if (h != 0) throw config_error("min-cut mapping requires a zero external field");
}

} // namespace

MinCutProblem MinCutProblem::make(Graph graph, Coefficients coeffs,
                                  std::vector<std::int64_t> external_field) {
  if (coeffs.a_num <= 0 || coeffs.b_num <= 0 || coeffs.denom <= 0)
    throw config_error("coefficients must be positive");
  check_field(external_field, graph.num_nodes());
  const std::int64_t k =
      std::min<std::int64_t>(2 * static_cast<std::int64_t>(graph.max_degree()),
                             graph.num_nodes());
  // A/B >= k/8  <=>  8*a_num >= k*b_num.
  if (8 * coeffs.a_num < k * coeffs.b_num)
    throw config_error(
        "A/B below the coefficient rule min(2*max_degree, N)/8; use "
        "make_unchecked to opt out");
  return MinCutProblem(std::move(graph), coeffs, std::move(external_field));
}

MinCutProblem MinCutProblem::make_unchecked(Graph graph, Coefficients coeffs,
                                            std::vector<std::int64_t> external_field) {
  if (coeffs.a_num <= 0 || coeffs.b_num <= 0 || coeffs.denom <= 0)
    throw config_error("coefficients must be positive");
  check_field(external_field, graph.num_nodes());
  return MinCutProblem(std::move(graph), coeffs, std::move(external_field));
}

MinCutProblem MinCutProblem::with_default_coefficients(Graph graph) {
  return make_unchecked(std::move(graph), solver_default_coefficients());
}

bool MinCutProblem::satisfies_coefficient_rule() const {
  const std::int64_t k =
      std::min<std::int64_t>(2 * static_cast<std::int64_t>(graph_.max_degree()),
                             graph_.num_nodes());
  return 8 * coeffs_.a_num >= k * coeffs_.b_num;
}

double local_field(const MinCutProblem& problem, const SpinState& state,
                   std::int32_t i) {
  const Graph& g = problem.graph();
  if (i < 0 || i >= g.num_nodes()) throw domain_error("node index out of range");
  if (static_cast<std::int64_t>(state.size()) != g.num_nodes())
    throw domain_error("spin state length does not match node count");

  std::int64_t neighbor_sum = 0; // sum_j w_ij sigma_j
  for (const Neighbor& nb : g.neighbors(i))
    neighbor_sum += static_cast<std::int64_t>(nb.weight) * state[nb.node];
  // S = (B/2) * neighbor_sum + h_i, exact in halves of b_num/denom.
  const Coefficients& c = problem.coefficients();
  return (static_cast<double>(c.b_num) * static_cast<double>(neighbor_sum)) /
             (2.0 * static_cast<double>(c.denom)) +
         static_cast<double>(problem.external_field(i));
}

CandidateEnergies candidate_energies_mincut(const MinCutProblem& problem,
                                            const SpinState& state,
                                            std::int64_t balance_excl,
                                            std::int32_t i) {
  const Graph& g = problem.graph();
  if (i < 0 || i >= g.num_nodes()) throw domain_error("node index out of range");
  if (static_cast<std::int64_t>(state.size()) != g.num_nodes())
    throw domain_error("spin state length does not match node count");

  std::int64_t disagree_plus = 0;  // sum_j w_ij * [sigma_j != +1]
  std::int64_t disagree_minus = 0; // sum_j w_ij * [sigma_j != -1]
  for (const Neighbor& nb : g.neighbors(i)) {
    if (state[nb.node] == 1)
      disagree_minus += nb.weight;
    else
      disagree_plus += nb.weight;
  }

  const Coefficients& c = problem.coefficients();
  auto energy = [&](std::int64_t s, std::int64_t disagree) {
    std::int64_t d = balance_excl + s;
    return c.a_num * d * d + c.b_num * disagree;
  };
  return {energy(-1, disagree_minus), energy(+1, disagree_plus), c.denom};
}

std::int64_t global_hamiltonian_scaled(const MinCutProblem& problem,
                                       const SpinState& state) {
  const Graph& g = problem.graph();
  if (static_cast<std::int64_t>(state.size()) != g.num_nodes())
    throw domain_error("spin state length does not match node count");

  std::int64_t cut = 0;
  for (std::int32_t u = 0; u < g.num_nodes(); u++)
    for (const Neighbor& nb : g.neighbors(u))
      if (u < nb.node && state[u] != state[nb.node]) cut += nb.weight;

  const std::int64_t balance = spin_sum(state);
  const Coefficients& c = problem.coefficients();
  return c.a_num * balance * balance + c.b_num * cut;
}

double global_hamiltonian(const MinCutProblem& problem, const SpinState& state) {
  return static_cast<double>(global_hamiltonian_scaled(problem, state)) /
         static_cast<double>(problem.coefficients().denom);
}

} // namespace ising
