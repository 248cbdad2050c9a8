#include "ising/gen.hpp"

#include <numeric>
#include <unordered_set>
#include <vector>

#include "ising/errors.hpp"
#include "ising/rng.hpp"

namespace ising {

Graph random_graph(std::int32_t n, std::int64_t m, std::uint64_t seed) {
  if (n < 2) throw domain_error("random_graph needs n >= 2");
  const std::int64_t max_edges =
      static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m > max_edges) throw domain_error("more edges than node pairs");

  Rng rng(seed);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(m) * 2);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (static_cast<std::int64_t>(edges.size()) < m) {
    auto u = static_cast<std::int32_t>(rng.next_below(n));
    auto v = static_cast<std::int32_t>(rng.next_below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    if (seen.insert(key).second) edges.push_back({u, v, 1});
  }
  return Graph::from_edges(n, edges);
}

Graph torus_graph(std::int32_t rows, std::int32_t cols, std::uint64_t seed) {
  if (rows < 3 || cols < 3)
    throw domain_error("torus needs rows, cols >= 3"); // avoids parallel edges
  const std::int32_t n = rows * cols;

  std::vector<std::int32_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  Rng rng(seed);
  for (std::int32_t i = n - 1; i > 0; i--)
    std::swap(label[i], label[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2) * n);
  for (std::int32_t r = 0; r < rows; r++)
    for (std::int32_t c = 0; c < cols; c++) {
      std::int32_t u = r * cols + c;
      edges.push_back({label[u], label[r * cols + (c + 1) % cols], 1});
      edges.push_back({label[u], label[((r + 1) % rows) * cols + c], 1});
    }
  return Graph::from_edges(n, edges);
}

Graph random_tree(std::int32_t n, std::uint64_t seed) {
  if (n < 2) throw domain_error("random_tree needs n >= 2");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (std::int32_t v = 1; v < n; v++)
    edges.push_back({static_cast<std::int32_t>(rng.next_below(v)), v, 1});
  return Graph::from_edges(n, edges);
}

Graph random_connected_gnp(std::int32_t n, double p, std::uint64_t seed) {
  if (n < 2) throw domain_error("random_connected_gnp needs n >= 2");
  if (!(p > 0.0 && p <= 1.0))
    throw domain_error("edge probability must be in (0, 1]");

  Rng rng(seed);
  for (;;) {
    std::vector<Edge> edges;
    for (std::int32_t u = 0; u < n; u++)
      for (std::int32_t v = u + 1; v < n; v++)
        if (rng.next_unit() < p) edges.push_back({u, v, 1});
    Graph g = Graph::from_edges(n, edges);

    std::vector<std::int32_t> stack{0};
    std::vector<bool> visited(n, false);
    visited[0] = true;
    std::int32_t reached = 1;
    while (!stack.empty()) {
      std::int32_t u = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : g.neighbors(u))
        if (!visited[nb.node]) {
          visited[nb.node] = true;
          reached++;
          stack.push_back(nb.node);
        }
    }
    if (reached == n) return g;
  }
}

} // namespace ising
