#pragma once

#include <vector>

#include "toric/graph.hpp"

namespace toric {

enum class BlockKind {
  Cycle,    // single simple cycle; length 1 (loop) and 2 (parallel pair) count
  CutEdge,  // bridge
  Other,    // biconnected but not a cycle (K4, theta graphs, triple parallels)
};

struct Block {
  std::vector<int> edges;     // original edge indices, sorted
  std::vector<int> vertices;  // sorted; size() is the block size S(v)
  BlockKind kind;
};

/// Biconnected components of an edge-induced subgraph. Blocks partition the
/// edge set; a loop forms a block on its own.
///
/// cut_vertices are the vertices lying in two or more blocks. Without loops
/// this is exactly the articulation-point condition; a loop attaches a block
/// to its vertex without geometrically separating anything, and the
/// two-or-more-blocks reading is the one under which the primitive-walk
/// characterization matches the lattice oracle on multigraphs.
struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<int> cut_vertices;             // sorted
  std::vector<int> cut_edges;                // sorted bridge edge indices
  std::vector<std::vector<int>> vertex_blocks;  // vertex -> block ids (graph-sized)

  int block_count() const { return static_cast<int>(blocks.size()); }
  bool all_blocks_cycle_or_cut_edge() const;
  /// Total number of edges lying in Cycle blocks.
  int cyclic_edge_count() const;
};

BlockDecomposition blocks(const Graph& g);
BlockDecomposition blocks(const Graph& g, const std::vector<int>& edge_subset);

/// Block-adjacency graph B(W): one node per block, an edge whenever two
/// blocks share a (cut) vertex. Two blocks share at most one vertex, stored
/// on the adjacency.
struct BlockTree {
  int node_count = 0;
  struct Edge {
    int block_a;
    int block_b;
    int shared_vertex;
  };
  std::vector<Edge> edges;
  std::vector<int> degree;      // per block node
  std::vector<char> leaf;       // degree <= 1

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_tree() const;
  std::vector<std::vector<int>> adjacency() const;  // node -> neighbor nodes
};

/// Requires the decomposed subgraph to be connected (throws otherwise).
/// The result is a tree whenever every cut vertex lies in exactly two
/// blocks; in general it may contain cliques of mutually touching blocks.
BlockTree block_tree(const BlockDecomposition& d);

}  // namespace toric
