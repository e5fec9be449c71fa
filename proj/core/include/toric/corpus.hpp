#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "toric/bound.hpp"
#include "toric/graph.hpp"

namespace toric {

/// Deterministic RNG wrapper. Bounded draws avoid
/// std::uniform_int_distribution, whose output is implementation-defined;
/// mt19937_64 itself is pinned by the standard, so corpora are reproducible
/// across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-enough draw from [0, bound); bound must be positive.
  int draw(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }

 private:
  std::mt19937_64 engine_;
};

/// Connected multigraph with up to max_vertices vertices and max_edges
/// edges: a random attachment tree plus extra edges drawn with explicit
/// loop and parallel-edge weight.
Graph random_connected_multigraph(Rng& rng, int max_vertices = 7, int max_edges = 10);

/// Uniform labeled tree via a random Pruefer sequence.
Tree random_tree(Rng& rng, int min_vertices = 3, int max_vertices = 50);

/// Every connected simple graph with n <= max_vertices vertices (all n
/// present, no isolated vertices except the n=1 graph) and at most
/// max_edges edges, enumerated by labeled edge set. Intended for small
/// bounds only; the count grows as 2^(n choose 2).
std::vector<Graph> exhaustive_connected_graphs(int max_vertices, int max_edges);

}  // namespace toric
