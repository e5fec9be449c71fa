#pragma once

#include <utility>
#include <vector>

#include "toric/graph_circuits.hpp"
#include "toric/graph_graver.hpp"
#include "toric/types.hpp"

namespace toric {

/// Unrooted tree on vertices 0..n-1.
struct Tree {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
  bool is_valid_tree() const;  // connected and acyclic
};

struct RootedTree {
  Tree tree;
  int root = 0;
  std::vector<int> parent;        // -1 at the root
  std::vector<int> degree;        // unrooted degrees
  std::vector<char> leaf;         // degree <= 1

  static RootedTree rooted_at(const Tree& t, int root);
};

/// (M/2 + 1) e^{M/e}: the vertex-count bound of the tree lemma.
double tree_lemma_bound(double M);

/// n^2 e^{2n/e}: the Graver-degree bound in terms of the maximal circuit
/// degree n.
double graver_degree_bound(int n);

struct LeafPathSum {
  int max_sum = 0;
  std::vector<int> path;  // vertices of one maximizing leaf-to-leaf path
};

/// Maximum over leaf-to-leaf paths of the summed degrees of the interior
/// vertices. Requires at least three vertices.
LeafPathSum leaf_path_degree_sums(const Tree& t);

/// Sum over root-to-leaf paths of 1/(deg(u0) * prod (deg(u_i)-1)), exact.
/// This is the total probability of a uniform downward walk and always
/// equals one; the root must not be a leaf.
Rational descent_probability_total(const RootedTree& t);

/// True iff every root-to-leaf path satisfies
/// prod_{i<s} deg(u_i) <= e^{M/e} + eps.
bool leaf_path_product_bound_check(const RootedTree& t, double M, double eps = 1e-9);

/// Circuit obtained from a leaf-to-leaf path in the block tree of a
/// primitive subgraph: the two leaf blocks are odd cycles, and inside each
/// intermediate cycle block the connecting path takes the longer arc
/// between the two attachment vertices (ties resolved towards the arc
/// holding the lowest edge index). Throws std::logic_error if a leaf block
/// is an even cycle.
CircuitWitness circuit_from_leaf_path(const Graph& g, const PrimitiveSubgraph& P,
                                      const std::vector<int>& leaf_path_blocks);

/// Per-graph record of the degree bound and the intermediate quantities of
/// its proof. Every `holds` flag is a proved statement: a false flag on a
/// valid input is a bug, not data.
struct BoundReport {
  int n = 0;                     // max circuit degree
  int max_graver_degree = 0;
  double bound_value = 0.0;      // n^2 e^{2n/e}
  int block_count_max = 0;
  double block_count_bound = 0.0;  // n e^{2n/e}
  int max_leaf_path_degree_sum = 0;
  int leaf_path_cap = 0;           // 2n-2
  int max_block_walk_edges = 0;    // cut edges counted twice
  int block_walk_edge_cap = 0;     // 2n
  bool holds_degree_bound = true;
  bool holds_leaf_path_sum = true;
  bool holds_block_count = true;
  bool holds_block_edges = true;

  bool all_hold() const {
    return holds_degree_bound && holds_leaf_path_sum && holds_block_count && holds_block_edges;
  }
};

inline constexpr double kBoundTolerance = 1e-9;

BoundReport verify_bound(const Graph& g, const GraverEnumerationCaps& caps = {});

}  // namespace toric
