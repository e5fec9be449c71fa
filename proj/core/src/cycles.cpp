#include "toric/cycles.hpp"

#include <string>

#include "toric/errors.hpp"

namespace toric {

namespace {

// Each cycle is reported with its lowest edge index first. Fixing the
// traversal of that edge from endpoint_a to endpoint_b kills the
// reflected duplicate: the remainder of the cycle is then a unique simple
// path back, found by DFS restricted to higher edge indices.
struct CycleSearch {
  const Graph& g;
  const std::vector<std::vector<int>>& inc;
  std::int64_t cap;
  std::vector<Walk>& out;
  int base_edge = 0;
  int target = 0;
  std::vector<char> on_path;
  std::vector<int> path_edges;

  void dfs(int v) {
    for (int e : inc[v]) {
      if (e <= base_edge || g.is_loop(e)) continue;
      int w = g.traverse(e, v);
      if (w == target) {
        if (static_cast<std::int64_t>(out.size()) >= cap)
          throw CapExceeded("enumerate_simple_cycles: more than " + std::to_string(cap) + " cycles");
        Walk c;
        c.start_vertex = target;
        c.edge_sequence.push_back(base_edge);
        c.edge_sequence.insert(c.edge_sequence.end(), path_edges.begin(), path_edges.end());
        c.edge_sequence.push_back(e);
        out.push_back(std::move(c));
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = 1;
      path_edges.push_back(e);
      dfs(w);
      path_edges.pop_back();
      on_path[w] = 0;
    }
  }
};

}  // namespace

std::vector<Walk> enumerate_simple_cycles(const Graph& g, std::int64_t cap) {
  std::vector<Walk> out;
  auto inc = g.incidence_lists();
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edges[e];
    if (a == b) {
      if (static_cast<std::int64_t>(out.size()) >= cap)
        throw CapExceeded("enumerate_simple_cycles: more than " + std::to_string(cap) + " cycles");
      out.push_back(Walk{a, {e}});
      continue;
    }
    // 2-cycles through a parallel edge f > e
    for (int f : inc[a]) {
      if (f <= e || g.is_loop(f)) continue;
      if (g.traverse(f, a) == b) {
        if (static_cast<std::int64_t>(out.size()) >= cap)
          throw CapExceeded("enumerate_simple_cycles: more than " + std::to_string(cap) + " cycles");
        out.push_back(Walk{a, {e, f}});
      }
    }
    // longer cycles: path from b back to a avoiding a and b internally
    CycleSearch s{g, inc, cap, out, e, a, std::vector<char>(g.vertex_count, 0), {}};
    s.on_path[a] = 1;
    s.on_path[b] = 1;
    // skip length-2 results here, the parallel scan above produced them
    for (int f : inc[b]) {
      if (f <= e || g.is_loop(f)) continue;
      int w = g.traverse(f, b);
      if (w == a || s.on_path[w]) continue;
      s.on_path[w] = 1;
      s.path_edges.push_back(f);
      s.dfs(w);
      s.path_edges.pop_back();
      s.on_path[w] = 0;
    }
  }
  return out;
}

}  // namespace toric
