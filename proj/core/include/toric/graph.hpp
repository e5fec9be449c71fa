#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toric/matrix.hpp"

namespace toric {

/// Finite undirected multigraph. Loops are edges with equal endpoints;
/// parallel edges are distinct entries of `edges`. The position of an edge
/// in `edges` is its index and identifies the incidence-matrix column.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_loop(int e) const { return edges[e].first == edges[e].second; }

  /// Other endpoint when traversing edge e from vertex v. For a loop this
  /// is v itself. Throws if v is not an endpoint of e.
  int traverse(int e, int v) const;

  /// Edge indices incident to each vertex (loops listed once).
  std::vector<std::vector<int>> incidence_lists() const;
};

/// Edge-list document: first line is the vertex count, every following
/// non-empty non-# line is "a b" with 0 <= a,b < n. Edge index = line order.
Graph parse_graph(const std::string& text);

std::string format_graph(const Graph& g);

/// n x m matrix, column j carrying 1 at both endpoints of edge j; a loop
/// column carries a single 2.
IntegerMatrix incidence_matrix(const Graph& g);

bool is_connected(const Graph& g);

/// Connected component label per vertex, with `skip_vertex` (if >= 0)
/// removed together with its incident edges. Removed vertex gets label -1.
std::vector<int> component_labels(const Graph& g, int skip_vertex = -1);

}  // namespace toric
