#include "toric/corpus.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace toric {

Graph random_connected_multigraph(Rng& rng, int max_vertices, int max_edges) {
  if (max_vertices < 1 || max_edges < 0) throw std::invalid_argument("random_connected_multigraph: bad caps");
  int n = 1 + rng.draw(max_vertices);
  while (n - 1 > max_edges) n = 1 + rng.draw(max_vertices);  // keep the spanning tree affordable

  Graph g;
  g.vertex_count = n;
  for (int v = 1; v < n; ++v) g.edges.emplace_back(rng.draw(v), v);

  int extra_budget = max_edges - (n - 1);
  int extra = extra_budget > 0 ? rng.draw(extra_budget + 1) : 0;
  for (int i = 0; i < extra; ++i) {
    int kind = rng.draw(100);
    if (kind < 20) {
      int v = rng.draw(n);
      g.edges.emplace_back(v, v);  // loop
    } else if (kind < 45 && !g.edges.empty()) {
      g.edges.push_back(g.edges[rng.draw(g.edge_count())]);  // parallel copy
    } else {
      g.edges.emplace_back(rng.draw(n), rng.draw(n));  // may be a loop by chance
    }
  }
  return g;
}

Tree random_tree(Rng& rng, int min_vertices, int max_vertices) {
  if (min_vertices < 3 || max_vertices < min_vertices) throw std::invalid_argument("random_tree: bad bounds");
  int n = min_vertices + rng.draw(max_vertices - min_vertices + 1);

  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = rng.draw(n);

  std::vector<int> degree(n, 1);
  for (int x : pruefer) degree[x] += 1;

  Tree t;
  t.vertex_count = n;
  // attach the smallest current leaf to the next sequence element
  std::vector<char> used(n, 0);
  for (int x : pruefer) {
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1 && !used[v]) {
        t.edges.emplace_back(v, x);
        used[v] = 1;
        degree[x] -= 1;
        break;
      }
    }
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1 && !used[v]) last.push_back(v);
  t.edges.emplace_back(last[0], last[1]);
  return t;
}

namespace {

bool spanning_connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 1) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps == 1;
}

}  // namespace

std::vector<Graph> exhaustive_connected_graphs(int max_vertices, int max_edges) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) all_pairs.emplace_back(a, b);
    int pairs = static_cast<int>(all_pairs.size());
    if (pairs > 30) throw std::invalid_argument("exhaustive_connected_graphs: too many vertices");
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
      if (std::popcount(mask) > max_edges) continue;
      Graph g;
      g.vertex_count = n;
      for (int i = 0; i < pairs; ++i)
        if (mask & (1ull << i)) g.edges.push_back(all_pairs[i]);
      if (n > 1 && static_cast<int>(g.edges.size()) < n - 1) continue;
      if (!spanning_connected(n, g.edges)) continue;
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace toric
