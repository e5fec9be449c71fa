#include "toric/graph_graver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

namespace {

// Connected components of the block-adjacency graph with one adjacency
// removed; labels per block, -1 when uncomputed.
std::vector<int> block_components_without(const BlockDecomposition& d, int block_a, int block_b) {
  int k = d.block_count();
  std::vector<std::vector<int>> adj(k);
  for (const auto& ids : d.vertex_blocks) {
    for (size_t i = 0; i < ids.size(); ++i)
      for (size_t j = i + 1; j < ids.size(); ++j) {
        int a = ids[i], b = ids[j];
        if ((a == block_a && b == block_b) || (a == block_b && b == block_a)) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
  }
  std::vector<int> label(k, -1);
  int next = 0;
  for (int s = 0; s < k; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

bool subgraph_connected(const Graph& g, const std::vector<int>& edge_subset) {
  if (edge_subset.empty()) return false;
  std::map<int, int> comp;  // vertex -> component, union-find over touched vertices
  std::vector<int> parent;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto id_of = [&](int v) {
    auto it = comp.find(v);
    if (it != comp.end()) return it->second;
    int id = static_cast<int>(parent.size());
    parent.push_back(id);
    comp.emplace(v, id);
    return id;
  };
  for (int e : edge_subset) {
    int a = find(id_of(g.edges[e].first));
    int b = find(id_of(g.edges[e].second));
    if (a != b) parent[a] = b;
  }
  int root = find(0);
  for (size_t i = 0; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) != root) return false;
  return true;
}

}  // namespace

bool cut_vertex_parity_check(const Graph& g, const BlockDecomposition& d, int v) {
  (void)g;
  const auto& ids = d.vertex_blocks[v];
  if (ids.size() != 2)
    throw std::invalid_argument("cut_vertex_parity_check: vertex lies in " + std::to_string(ids.size()) +
                                " blocks, expected exactly 2");
  auto label = block_components_without(d, ids[0], ids[1]);
  int parts = *std::max_element(label.begin(), label.end()) + 1;
  if (parts != 2) return false;  // removing v does not split W in two
  int cyclic_in_first = 0, cyclic_in_second = 0;
  for (int b = 0; b < d.block_count(); ++b) {
    if (d.blocks[b].kind != BlockKind::Cycle) continue;
    int count = static_cast<int>(d.blocks[b].edges.size());
    (label[b] == label[ids[0]] ? cyclic_in_first : cyclic_in_second) += count;
  }
  return cyclic_in_first % 2 == 1 && cyclic_in_second % 2 == 1;
}

PrimitivityCheck is_primitive_underlying(const Graph& g, const std::vector<int>& edge_subset) {
  if (edge_subset.empty()) return {false, "empty edge set"};
  if (!subgraph_connected(g, edge_subset)) return {false, "subgraph is disconnected"};
  BlockDecomposition d = blocks(g, edge_subset);
  if (!d.all_blocks_cycle_or_cut_edge()) return {false, "a block is neither a cycle nor a cut edge"};
  int cyclic = d.cyclic_edge_count();
  if (cyclic == 0) return {false, "no cycle block, the walk binomial would be zero"};
  if (cyclic % 2 != 0) return {false, "odd number of cyclic edges, no even walk exists"};
  for (int v : d.cut_vertices) {
    if (d.vertex_blocks[v].size() != 2)
      return {false, "cut vertex " + std::to_string(v) + " lies in more than two blocks"};
    if (!cut_vertex_parity_check(g, d, v))
      return {false, "cut vertex " + std::to_string(v) + " fails the odd/odd cyclic-edge split"};
  }
  return {true, ""};
}

namespace {

struct Composer {
  const Graph& g;
  const GraverEnumerationCaps& caps;
  // candidate blocks: all simple cycles, then every non-loop edge as a bridge
  std::vector<std::vector<int>> block_edges;
  std::vector<std::vector<int>> block_vertices;
  std::set<std::vector<int>> seen_states;  // sorted candidate-block id lists
  std::set<std::vector<int>> results;      // sorted edge sets
  std::int64_t states = 0;

  void grow(std::vector<int>& chosen, std::vector<int>& vertex_count) {
    std::vector<int> key = chosen;
    std::sort(key.begin(), key.end());
    if (!seen_states.insert(key).second) return;
    if (++states > caps.max_states)
      throw CapExceeded("enumerate_primitive_subgraphs: state cap " + std::to_string(caps.max_states) +
                        " exceeded");

    std::vector<int> W;
    for (int b : chosen) W.insert(W.end(), block_edges[b].begin(), block_edges[b].end());
    std::sort(W.begin(), W.end());
    if (is_primitive_underlying(g, W)) {
      if (static_cast<std::int64_t>(results.size()) >= caps.max_elements)
        throw CapExceeded("enumerate_primitive_subgraphs: element cap " + std::to_string(caps.max_elements) +
                          " exceeded");
      results.insert(W);
    }

    for (int b = 0; b < static_cast<int>(block_edges.size()); ++b) {
      // attach b at a vertex currently in exactly one block, all of b's
      // other vertices fresh
      int attach = -1;
      bool valid = true;
      for (int v : block_vertices[b]) {
        if (vertex_count[v] == 0) continue;
        if (vertex_count[v] != 1 || attach != -1) {
          valid = false;
          break;
        }
        attach = v;
      }
      if (!valid || attach == -1) continue;
      if (std::find(chosen.begin(), chosen.end(), b) != chosen.end()) continue;
      chosen.push_back(b);
      for (int v : block_vertices[b]) vertex_count[v] += 1;
      grow(chosen, vertex_count);
      for (int v : block_vertices[b]) vertex_count[v] -= 1;
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<PrimitiveSubgraph> enumerate_primitive_subgraphs(const Graph& g, const GraverEnumerationCaps& caps) {
  std::vector<Walk> cycles = enumerate_simple_cycles(g, caps.max_cycles);

  Composer c{g, caps, {}, {}, {}, {}, 0};
  for (const Walk& cy : cycles) {
    std::vector<int> es = cy.edge_sequence;
    std::sort(es.begin(), es.end());
    auto vs = walk_vertices(g, cy);
    std::set<int> vset(vs.begin(), vs.end());
    c.block_edges.push_back(std::move(es));
    c.block_vertices.emplace_back(vset.begin(), vset.end());
  }
  size_t cycle_count = c.block_edges.size();
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) continue;
    c.block_edges.push_back({e});
    c.block_vertices.push_back({std::min(g.edges[e].first, g.edges[e].second),
                                std::max(g.edges[e].first, g.edges[e].second)});
  }

  std::vector<int> chosen;
  std::vector<int> vertex_count(g.vertex_count, 0);
  for (size_t i = 0; i < cycle_count; ++i) {
    chosen.push_back(static_cast<int>(i));
    for (int v : c.block_vertices[i]) vertex_count[v] += 1;
    c.grow(chosen, vertex_count);
    for (int v : c.block_vertices[i]) vertex_count[v] -= 1;
    chosen.pop_back();
  }

  std::vector<PrimitiveSubgraph> out;
  for (const auto& W : c.results) {
    PrimitiveSubgraph p;
    p.edges = W;
    p.decomposition = blocks(g, W);
    p.tree = block_tree(p.decomposition);
    p.cyclic_edge_count = p.decomposition.cyclic_edge_count();
    p.cut_edge_count = static_cast<int>(p.decomposition.cut_edges.size());
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

struct WalkBuilder {
  const Graph& g;
  const PrimitiveSubgraph& P;
  std::vector<int> out_edges;

  // Other block attached at vertex v, or -1.
  int attached_block(int v, int current_block) const {
    for (int b : P.decomposition.vertex_blocks[v])
      if (b != current_block) return b;
    return -1;
  }

  // Cycle traversal of a Cycle block starting at entry: repeatedly take
  // the lowest-index unused block edge at the current vertex.
  std::vector<int> cycle_order(const Block& blk, int entry) const {
    std::vector<int> order;
    std::set<int> unused(blk.edges.begin(), blk.edges.end());
    int v = entry;
    while (!unused.empty()) {
      int pick = -1;
      for (int e : unused) {
        auto [a, b] = g.edges[e];
        if (a == v || b == v) {
          pick = e;
          break;
        }
      }
      if (pick == -1) throw std::logic_error("primitive_walk: cycle block traversal stuck");
      unused.erase(pick);
      order.push_back(pick);
      v = g.traverse(pick, v);
    }
    if (v != entry) throw std::logic_error("primitive_walk: cycle block traversal not closed");
    return order;
  }

  void emit(int block_id, int entry, int parent_block) {
    const Block& blk = P.decomposition.blocks[block_id];
    if (blk.kind == BlockKind::CutEdge) {
      int e = blk.edges[0];
      int far = g.traverse(e, entry);
      out_edges.push_back(e);
      int child = attached_block(far, block_id);
      if (child != -1 && child != parent_block) emit(child, far, block_id);
      out_edges.push_back(e);
      return;
    }
    int v = entry;
    for (int e : cycle_order(blk, entry)) {
      out_edges.push_back(e);
      v = g.traverse(e, v);
      int child = attached_block(v, block_id);
      if (child != -1 && child != parent_block) emit(child, v, block_id);
    }
  }
};

}  // namespace

Walk primitive_walk(const Graph& g, const PrimitiveSubgraph& P) {
  if (P.decomposition.block_count() == 0) throw std::invalid_argument("primitive_walk: empty subgraph");

  // Root at the cycle block holding the lowest cyclic edge index. A cycle
  // root guarantees the traversal revisits the entry vertex at the end, so
  // a child block attached there is picked up; a cut-edge root would leave
  // its entry-side subtree unreached.
  int root = -1;
  for (int b = 0; b < P.decomposition.block_count(); ++b) {
    if (P.decomposition.blocks[b].kind != BlockKind::Cycle) continue;
    if (root == -1 || P.decomposition.blocks[b].edges[0] < P.decomposition.blocks[root].edges[0]) root = b;
  }
  if (root == -1) throw std::invalid_argument("primitive_walk: subgraph has no cycle block");
  int entry = P.decomposition.blocks[root].vertices[0];

  WalkBuilder builder{g, P, {}};
  builder.emit(root, entry, -1);

  Walk w{entry, std::move(builder.out_edges)};

  // The primitive-walk characterization guarantees all of the following;
  // a violation is a bug here.
  if (!is_closed_walk(g, w) || w.length() % 2 != 0)
    throw std::logic_error("primitive_walk: walk is not closed and even");
  std::map<int, int> uses;
  for (int e : w.edge_sequence) uses[e] += 1;
  std::set<int> in_w(P.edges.begin(), P.edges.end());
  for (int e : P.edges) {
    bool cut = std::binary_search(P.decomposition.cut_edges.begin(), P.decomposition.cut_edges.end(), e);
    if (uses[e] != (cut ? 2 : 1)) throw std::logic_error("primitive_walk: wrong edge multiplicity");
  }
  for (auto [e, k] : uses)
    if (!in_w.count(e)) throw std::logic_error("primitive_walk: walk left the subgraph");
  Binomial b = walk_binomial(g, w);
  if (!b.disjoint_supports()) throw std::logic_error("primitive_walk: sides of the binomial overlap");
  return w;
}

int graver_degree(const PrimitiveSubgraph& P) {
  int len = P.cyclic_edge_count + 2 * P.cut_edge_count;
  if (len % 2 != 0) throw std::invalid_argument("graver_degree: odd walk length");
  return len / 2;
}

BinomialSet graver_basis_graph(const Graph& g, const GraverEnumerationCaps& caps) {
  BinomialSet out;
  for (const PrimitiveSubgraph& P : enumerate_primitive_subgraphs(g, caps))
    out.insert(walk_binomial(g, primitive_walk(g, P)).canonical());
  return out;
}

}  // namespace toric
