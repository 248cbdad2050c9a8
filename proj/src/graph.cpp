#include "ising/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "ising/errors.hpp"

namespace ising {

namespace {

std::uint64_t pair_key(std::int32_t a, std::int32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '%' || c == '#';
  }
  return true;
}

// Parses exactly `count` integers and nothing else from `line`.
bool parse_ints(const std::string& line, long long* out, int count) {
  const char* p = line.data();
  const char* end = p + line.size();
  for (int k = 0; k < count; k++) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) p++;
    auto [next, ec] = std::from_chars(p, end, out[k]);
    if (ec != std::errc{} || next == p) return false;
    p = next;
  }
  while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) p++;
  return p == end;
}

} // namespace

Graph Graph::from_edges(std::int32_t num_nodes, std::span<const Edge> edges) {
  if (num_nodes <= 0) throw domain_error("graph needs a positive node count");

  Graph g;
  g.num_nodes_ = num_nodes;
  g.num_edges_ = static_cast<std::int64_t>(edges.size());

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  std::vector<std::int32_t> deg(num_nodes, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= num_nodes || e.v < 0 || e.v >= num_nodes)
      throw domain_error("edge endpoint out of range");
    if (e.u == e.v) throw domain_error("self-loop");
    if (!seen.insert(pair_key(e.u, e.v)).second)
      throw domain_error("duplicate edge");
    deg[e.u]++;
    deg[e.v]++;
    if (e.weight != 1) g.all_unit_weights_ = false;
  }

  g.offsets_.assign(num_nodes + 1, 0);
  for (std::int32_t i = 0; i < num_nodes; i++) {
    g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.max_degree_ = std::max(g.max_degree_, deg[i]);
  }
  g.adjacency_.resize(2 * edges.size());
  std::vector<std::int64_t> pos(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.adjacency_[pos[e.u]++] = {e.v, e.weight};
    g.adjacency_[pos[e.v]++] = {e.u, e.weight};
  }
  return g;
}

Graph Graph::parse_gset(std::istream& in) {
  std::string line;
  long line_no = 0;

  long long header[2];
  for (;;) {
    if (!std::getline(in, line))
      throw parse_error("missing header line", line_no);
    line_no++;
    if (is_blank_or_comment(line)) continue;
    if (!parse_ints(line, header, 2))
      throw parse_error("header must be two integers \"N M\"", line_no);
    break;
  }
  const long long n = header[0], m = header[1];
  if (n <= 0) throw parse_error("node count must be positive", line_no);
  if (m < 0) throw parse_error("edge count must be non-negative", line_no);
  if (n > INT32_MAX) throw parse_error("node count too large", line_no);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(m) * 2);

  while (std::getline(in, line)) {
    line_no++;
    if (is_blank_or_comment(line)) continue;
    long long t[3];
    if (!parse_ints(line, t, 3))
      throw parse_error("edge line must be \"u v w\"", line_no);
    if (t[0] < 1 || t[0] > n || t[1] < 1 || t[1] > n)
      throw parse_error("endpoint out of range [1, " + std::to_string(n) + "]",
                        line_no);
    if (t[0] == t[1]) throw parse_error("self-loop", line_no);
    if (t[2] < INT32_MIN || t[2] > INT32_MAX)
      throw parse_error("weight out of range", line_no);
    auto u = static_cast<std::int32_t>(t[0] - 1);
    auto v = static_cast<std::int32_t>(t[1] - 1);
    if (!seen.insert(pair_key(u, v)).second)
      throw parse_error("duplicate edge", line_no);
    edges.push_back({u, v, static_cast<std::int32_t>(t[2])});
  }

  if (static_cast<long long>(edges.size()) != m)
    throw parse_error("header announces " + std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
  return from_edges(static_cast<std::int32_t>(n), edges);
}

Graph Graph::parse_gset(const std::string& text) {
  std::istringstream in(text);
  return parse_gset(in);
}

Graph Graph::parse_gset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  return parse_gset(in);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (std::int32_t u = 0; u < num_nodes_; u++)
    for (const Neighbor& nb : neighbors(u))
      if (u < nb.node) out.push_back({u, nb.node, nb.weight});
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return out;
}

std::string Graph::to_gset() const {
  std::ostringstream out;
  out << num_nodes_ << ' ' << num_edges_ << '\n';
  for (const Edge& e : edges())
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.weight << '\n';
  return out.str();
}

Graph Graph::with_unit_weights() const {
  Graph g = *this;
  for (Neighbor& nb : g.adjacency_) nb.weight = 1;
  g.all_unit_weights_ = true;
  return g;
}

double density(const Graph& g) {
  if (g.num_nodes() < 2)
    throw domain_error("density needs at least 2 nodes");
  return 2.0 * static_cast<double>(g.num_edges()) /
         (static_cast<double>(g.num_nodes()) *
          static_cast<double>(g.num_nodes() - 1));
}

} // namespace ising
