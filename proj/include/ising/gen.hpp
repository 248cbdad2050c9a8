#pragma once

#include <cstdint>

#include "ising/graph.hpp"

namespace ising {

// Seeded instance generators for benchmarks and tests. All outputs are
// deterministic functions of their arguments.

// Uniform random graph with exactly m distinct edges, unit weights.
Graph random_graph(std::int32_t n, std::int64_t m, std::uint64_t seed);

// 4-regular 2D torus (rows*cols nodes, 2*rows*cols edges) with node labels
// shuffled by seed, unit weights.
Graph torus_graph(std::int32_t rows, std::int32_t cols, std::uint64_t seed);

// Uniform attachment tree on n nodes (n-1 edges), unit weights.
Graph random_tree(std::int32_t n, std::uint64_t seed);

// G(n, p) resampled until connected, unit weights. Intended for small n.
Graph random_connected_gnp(std::int32_t n, double p, std::uint64_t seed);

} // namespace ising
