#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/blocks.hpp"
#include "toric/cycles.hpp"
#include "toric/walk.hpp"

namespace toric {

/// Subgraph underlying a primitive walk: every block a cycle or cut edge,
/// every cut vertex in exactly two blocks with the odd cyclic-edge split,
/// and an even total walk length.
struct PrimitiveSubgraph {
  std::vector<int> edges;  // sorted edge indices
  BlockDecomposition decomposition;
  BlockTree tree;
  int cyclic_edge_count = 0;
  int cut_edge_count = 0;
};

struct PrimitivityCheck {
  bool ok = false;
  std::string reason;  // failed condition when !ok
  explicit operator bool() const { return ok; }
};

/// Primitivity conditions on a nonempty edge subset.
PrimitivityCheck is_primitive_underlying(const Graph& g, const std::vector<int>& edge_subset);

/// The odd/odd split test at one cut vertex: v must lie in exactly two
/// blocks (throws otherwise); true iff removing v leaves exactly two parts
/// and both contain an odd number of cycle-block edges, where block edges
/// stay with the part holding the rest of their block.
bool cut_vertex_parity_check(const Graph& g, const BlockDecomposition& d, int v);

struct GraverEnumerationCaps {
  std::int64_t max_cycles = kDefaultCycleCap;
  std::int64_t max_elements = 100'000;
  std::int64_t max_states = 1'000'000;  // intermediate block-tree shapes
};

/// All primitive subgraphs, each exactly once, by growing block trees:
/// start from every simple cycle and attach cycles or bridge edges at
/// single vertices, keeping every shape that passes the conditions.
std::vector<PrimitiveSubgraph> enumerate_primitive_subgraphs(const Graph& g,
                                                             const GraverEnumerationCaps& caps = {});

/// Closed even walk using each cycle-block edge once and each cut edge
/// twice, by depth-first traversal of the block tree. Throws
/// std::logic_error when the constructed walk violates its guarantees,
/// which would indicate a construction bug.
Walk primitive_walk(const Graph& g, const PrimitiveSubgraph& P);

/// Half the walk length: (cyclic + 2*cut)/2.
int graver_degree(const PrimitiveSubgraph& P);

/// Canonical binomial set over all primitive subgraphs.
BinomialSet graver_basis_graph(const Graph& g, const GraverEnumerationCaps& caps = {});

}  // namespace toric
