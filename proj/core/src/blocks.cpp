#include "toric/blocks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

BlockKind classify(const Graph& g, const std::vector<int>& block_edges) {
  if (block_edges.size() == 1) {
    return g.is_loop(block_edges[0]) ? BlockKind::Cycle : BlockKind::CutEdge;
  }
  // A biconnected multigraph is a single cycle iff every vertex has
  // degree 2 within the block.
  std::map<int, int> deg;
  for (int e : block_edges) {
    deg[g.edges[e].first] += 1;
    deg[g.edges[e].second] += 1;
  }
  for (auto [v, d] : deg)
    if (d != 2) return BlockKind::Other;
  return BlockKind::Cycle;
}

struct Tarjan {
  const Graph& g;
  const std::vector<char>& in_subset;
  std::vector<std::vector<int>> inc;  // restricted incidence lists
  std::vector<int> disc, low;
  int time = 0;
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> block_edge_sets;

  explicit Tarjan(const Graph& graph, const std::vector<char>& subset_mask)
      : g(graph), in_subset(subset_mask), disc(g.vertex_count, -1), low(g.vertex_count, -1) {
    inc.resize(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!in_subset[e]) continue;
      inc[g.edges[e].first].push_back(e);
      if (!g.is_loop(e)) inc[g.edges[e].second].push_back(e);
    }
  }

  void pop_block(int until_edge) {
    std::vector<int> es;
    while (true) {
      int e = edge_stack.back();
      edge_stack.pop_back();
      es.push_back(e);
      if (e == until_edge) break;
    }
    block_edge_sets.push_back(std::move(es));
  }

  void dfs(int v, int parent_edge) {
    disc[v] = low[v] = time++;
    for (int e : inc[v]) {
      if (e == parent_edge) continue;
      if (g.is_loop(e)) {
        block_edge_sets.push_back({e});
        continue;
      }
      int w = g.traverse(e, v);
      if (disc[w] == -1) {
        edge_stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) pop_block(e);
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
      // disc[w] > disc[v]: already stacked from the other endpoint
    }
  }
};

}  // namespace

bool BlockDecomposition::all_blocks_cycle_or_cut_edge() const {
  for (const Block& b : blocks)
    if (b.kind == BlockKind::Other) return false;
  return true;
}

int BlockDecomposition::cyclic_edge_count() const {
  int c = 0;
  for (const Block& b : blocks)
    if (b.kind == BlockKind::Cycle) c += static_cast<int>(b.edges.size());
  return c;
}

BlockDecomposition blocks(const Graph& g, const std::vector<int>& edge_subset) {
  std::vector<char> mask(g.edge_count(), 0);
  for (int e : edge_subset) mask[e] = 1;
  Tarjan t(g, mask);
  for (int v = 0; v < g.vertex_count; ++v)
    if (t.disc[v] == -1 && !t.inc[v].empty()) t.dfs(v, -1);

  BlockDecomposition d;
  d.vertex_blocks.resize(g.vertex_count);
  for (auto& es : t.block_edge_sets) {
    Block b;
    std::sort(es.begin(), es.end());
    b.edges = es;
    std::set<int> vs;
    for (int e : es) {
      vs.insert(g.edges[e].first);
      vs.insert(g.edges[e].second);
    }
    b.vertices.assign(vs.begin(), vs.end());
    b.kind = classify(g, es);
    int id = static_cast<int>(d.blocks.size());
    for (int v : b.vertices) d.vertex_blocks[v].push_back(id);
    if (b.kind == BlockKind::CutEdge) d.cut_edges.push_back(es[0]);
    d.blocks.push_back(std::move(b));
  }
  for (int v = 0; v < g.vertex_count; ++v)
    if (d.vertex_blocks[v].size() >= 2) d.cut_vertices.push_back(v);
  std::sort(d.cut_edges.begin(), d.cut_edges.end());
  return d;
}

BlockDecomposition blocks(const Graph& g) {
  std::vector<int> all(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) all[e] = e;
  return blocks(g, all);
}

bool BlockTree::is_tree() const {
  if (node_count == 0) return false;
  if (edge_count() != node_count - 1) return false;
  // connected check via union of edges
  std::vector<int> parent(node_count);
  for (int i = 0; i < node_count; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = node_count;
  for (const Edge& e : edges) {
    int a = find(e.block_a), b = find(e.block_b);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

std::vector<std::vector<int>> BlockTree::adjacency() const {
  std::vector<std::vector<int>> adj(node_count);
  for (const Edge& e : edges) {
    adj[e.block_a].push_back(e.block_b);
    adj[e.block_b].push_back(e.block_a);
  }
  return adj;
}

BlockTree block_tree(const BlockDecomposition& d) {
  BlockTree t;
  t.node_count = d.block_count();
  for (size_t v = 0; v < d.vertex_blocks.size(); ++v) {
    const auto& ids = d.vertex_blocks[v];
    for (size_t i = 0; i < ids.size(); ++i)
      for (size_t j = i + 1; j < ids.size(); ++j)
        t.edges.push_back({ids[i], ids[j], static_cast<int>(v)});
  }
  t.degree.assign(t.node_count, 0);
  for (const auto& e : t.edges) {
    t.degree[e.block_a] += 1;
    t.degree[e.block_b] += 1;
  }
  t.leaf.resize(t.node_count);
  for (int i = 0; i < t.node_count; ++i) t.leaf[i] = t.degree[i] <= 1;

  if (t.node_count > 0) {
    // reject decompositions of disconnected subgraphs
    std::vector<int> parent(t.node_count);
    for (int i = 0; i < t.node_count; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int comps = t.node_count;
    for (const auto& e : t.edges) {
      int a = find(e.block_a), b = find(e.block_b);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    if (comps != 1) throw std::invalid_argument("block_tree: underlying subgraph is disconnected");
  }
  return t;
}

}  // namespace toric
