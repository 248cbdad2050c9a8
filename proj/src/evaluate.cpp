#include "ising/evaluate.hpp"

#include <algorithm>
#include <cstdlib>

#include "ising/errors.hpp"

namespace ising {

std::int64_t cut_value(const Graph& g, const SpinState& state) {
  if (static_cast<std::int64_t>(state.size()) != g.num_nodes())
    throw domain_error("spin state length does not match node count");
  std::int64_t cut = 0;
  for (std::int32_t u = 0; u < g.num_nodes(); u++)
    for (const Neighbor& nb : g.neighbors(u))
      if (u < nb.node && state[u] != state[nb.node]) cut += nb.weight;
  return cut;
}

std::int64_t imbalance(const SpinState& state) {
  std::int64_t sum = spin_sum(state);
  return sum < 0 ? -sum : sum;
}

PartitionScore score(const MinCutProblem& problem, const SpinState& state) {
  std::int64_t cut = cut_value(problem.graph(), state);
  std::int64_t imb = imbalance(state);
  const Coefficients& c = problem.coefficients();
  std::int64_t h_scaled = c.a_num * imb * imb + c.b_num * cut;
  return {cut, imb, h_scaled,
          static_cast<double>(h_scaled) / static_cast<double>(c.denom)};
}

OracleResult brute_force_balanced_mincut(const Graph& g,
                                         std::int64_t max_imbalance) {
  const std::int32_t n = g.num_nodes();
  if (n > kOracleMaxNodes)
    throw capacity_error("oracle enumeration is limited to N <= " +
                         std::to_string(kOracleMaxNodes));
  if (max_imbalance < (n % 2))
    throw domain_error("max_imbalance below parity floor N mod 2");

  const auto edges = g.edges();
  SpinState state(n, -1);
  SpinState best_state;
  std::int64_t best_cut = 0;
  bool found = false;

  auto consider = [&](std::uint32_t plus_mask) {
    // bit i set -> sigma_i = +1; bit 0 always set.
    for (std::int32_t i = 0; i < n; i++)
      state[i] = (plus_mask >> i & 1u) ? 1 : -1;
    std::int64_t cut = 0;
    for (const Edge& e : edges)
      if (((plus_mask >> e.u ^ plus_mask >> e.v) & 1u) != 0) cut += e.weight;
    if (!found || cut < best_cut ||
        (cut == best_cut && std::lexicographical_compare(
                                state.begin(), state.end(), best_state.begin(),
                                best_state.end()))) {
      found = true;
      best_cut = cut;
      best_state = state;
    }
  };

  // Enumerate feasible part sizes only, sigma_0 fixed +1: choose k-1 of the
  // remaining n-1 nodes for the +1 side, walking k-subsets in Gosper order.
  for (std::int32_t k = 1; k <= n; k++) {
    if (std::abs(2 * static_cast<std::int64_t>(k) - n) > max_imbalance) continue;
    const std::int32_t pick = k - 1, pool = n - 1;
    if (pick > pool) continue;
    if (pick == 0) {
      consider(1u);
      continue;
    }
    std::uint32_t sub = (1u << pick) - 1;
    const std::uint32_t limit = 1u << pool;
    while (sub < limit) {
      consider((sub << 1) | 1u);
      std::uint32_t c = sub & -sub;
      std::uint32_t r = sub + c;
      sub = (((r ^ sub) >> 2) / c) | r;
    }
  }

  return {best_cut, std::move(best_state)};
}

} // namespace ising
