// Writes synthetic benchmark instances shaped like the published G-set rows
// (same node/edge counts and graph family), so the harness runs out of the
// box. Real G-set files are drop-in replacements.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ising/gen.hpp"
#include "ising/graph.hpp"

namespace {

struct Fixture {
  const char* id;
  const char* family; // er | torus | tree
  std::int32_t a;     // er: n, torus: rows, tree: n
  std::int64_t b;     // er: m, torus: cols, tree: unused
  std::uint64_t seed;
};

// Shapes follow the G-set rows the harness reproduces: random graphs with
// 1000 nodes, 4-regular tori, and the near-tree 10000-node instance.
const std::vector<Fixture> kFixtures = {
    {"G32", "torus", 100, 20, 32},  {"G33", "torus", 100, 20, 33},
    {"G34", "torus", 100, 20, 34},  {"G43", "er", 1000, 9990, 43},
    {"G44", "er", 1000, 9990, 44},  {"G45", "er", 1000, 9990, 45},
    {"G46", "er", 1000, 9990, 46},  {"G47", "er", 1000, 9990, 47},
    {"G48", "torus", 100, 30, 48},  {"G49", "torus", 100, 30, 49},
    {"G50", "torus", 100, 30, 50},  {"G51", "er", 1000, 5909, 51},
    {"G52", "er", 1000, 5916, 52},  {"G53", "er", 1000, 5914, 53},
    {"G54", "er", 1000, 5916, 54},  {"G57", "torus", 100, 50, 57},
    {"G67", "torus", 200, 50, 67},
    {"G70", "tree", 10000, 0, 70},
};

ising::Graph build(const Fixture& f) {
  std::string family(f.family);
  if (family == "er")
    return ising::random_graph(f.a, f.b, f.seed);
  if (family == "torus")
    return ising::torus_graph(f.a, static_cast<std::int32_t>(f.b), f.seed);
  return ising::random_tree(f.a, f.seed);
}

} // namespace

int main(int argc, char** argv) {
  std::filesystem::path out_dir = argc > 1 ? argv[1] : "fixtures";
  std::vector<std::string> only(argv + (argc > 2 ? 2 : argc), argv + argc);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "cannot create " << out_dir << ": " << ec.message() << "\n";
    return 1;
  }

  for (const Fixture& f : kFixtures) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), f.id) == only.end())
      continue;
    ising::Graph g = build(f);
    std::filesystem::path path = out_dir / (std::string(f.id) + ".txt");
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    out << "% synthetic stand-in for " << f.id << " (" << f.family
        << " family, seed " << f.seed << ")\n";
    out << g.to_gset();
    std::cout << path.string() << ": " << g.num_nodes() << " nodes, "
              << g.num_edges() << " edges\n";
  }
  return 0;
}
