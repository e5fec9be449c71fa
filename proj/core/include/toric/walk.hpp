#pragma once

#include <vector>

#include "toric/binomial.hpp"
#include "toric/graph.hpp"

namespace toric {

/// Walk given by its starting vertex and the traversed edge indices.
struct Walk {
  int start_vertex = 0;
  std::vector<int> edge_sequence;

  int length() const { return static_cast<int>(edge_sequence.size()); }
};

/// Vertices visited, length()+1 entries starting and (for closed walks)
/// ending at start_vertex. Throws if consecutive edges do not chain.
std::vector<int> walk_vertices(const Graph& g, const Walk& w);

bool is_closed_walk(const Graph& g, const Walk& w);

/// B_w: edges at odd positions (1st, 3rd, ...) accumulate into plus, even
/// positions into minus, with multiplicity. Requires a closed even walk.
/// Common factors of the two sides are kept as-is.
Binomial walk_binomial(const Graph& g, const Walk& w);

}  // namespace toric
