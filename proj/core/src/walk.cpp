#include "toric/walk.hpp"

#include <stdexcept>

namespace toric {

std::vector<int> walk_vertices(const Graph& g, const Walk& w) {
  std::vector<int> vs;
  vs.reserve(w.edge_sequence.size() + 1);
  int v = w.start_vertex;
  vs.push_back(v);
  for (int e : w.edge_sequence) {
    v = g.traverse(e, v);  // throws when the chain breaks
    vs.push_back(v);
  }
  return vs;
}

bool is_closed_walk(const Graph& g, const Walk& w) {
  return walk_vertices(g, w).back() == w.start_vertex;
}

Binomial walk_binomial(const Graph& g, const Walk& w) {
  if (w.length() % 2 != 0) throw std::invalid_argument("walk_binomial: walk has odd length");
  if (!is_closed_walk(g, w)) throw std::invalid_argument("walk_binomial: walk is not closed");
  ExponentVector plus(g.edge_count()), minus(g.edge_count());
  for (int k = 0; k < w.length(); ++k) {
    // position k+1 in 1-based counting
    if (k % 2 == 0)
      plus[w.edge_sequence[k]] += 1;
    else
      minus[w.edge_sequence[k]] += 1;
  }
  return Binomial{std::move(plus), std::move(minus)};
}

}  // namespace toric
