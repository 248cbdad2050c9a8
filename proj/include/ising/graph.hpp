#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ising {

struct Edge {
  std::int32_t u;
  std::int32_t v;
  std::int32_t weight;
};

struct Neighbor {
  std::int32_t node;
  std::int32_t weight;
};

// Immutable weighted undirected graph in compressed adjacency form.
// Invariants: symmetric adjacency, no self-loops, neighbor indices in [0, N),
// num_edges == adjacency entries / 2, max_degree == longest adjacency list.
class Graph {
public:
  Graph() = default;

  // Edges are given once per undirected pair; duplicates (either orientation)
  // are rejected. Isolated nodes are allowed.
  static Graph from_edges(std::int32_t num_nodes, std::span<const Edge> edges);

  // G-set text: header "N M", then one "u v w" line per edge, 1-indexed.
  // Lines starting with '%' or '#' and blank lines are skipped.
  static Graph parse_gset(std::istream& in);
  static Graph parse_gset(const std::string& text);
  static Graph parse_gset_file(const std::string& path);

  std::int32_t num_nodes() const { return num_nodes_; }
  std::int64_t num_edges() const { return num_edges_; }
  std::int32_t max_degree() const { return max_degree_; }
  bool all_unit_weights() const { return all_unit_weights_; }

  std::int32_t degree(std::int32_t v) const {
    return static_cast<std::int32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const Neighbor> neighbors(std::int32_t v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }

  // Edges in canonical order: ascending (min endpoint, max endpoint).
  std::vector<Edge> edges() const;

  // Canonical G-set re-serialization; reparsing yields an identical graph.
  std::string to_gset() const;

  // Copy with every weight forced to 1.
  Graph with_unit_weights() const;

private:
  std::int32_t num_nodes_ = 0;
  std::int64_t num_edges_ = 0;
  std::int32_t max_degree_ = 0;
  bool all_unit_weights_ = true;
  std::vector<std::int64_t> offsets_;   // size N+1
  std::vector<Neighbor> adjacency_;     // size 2*num_edges
};

// 2*M / (N*(N-1)); requires N >= 2.
double density(const Graph& g);

} // namespace ising
