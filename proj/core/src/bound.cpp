#include "toric/bound.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace toric {

std::vector<std::vector<int>> Tree::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<int> Tree::degrees() const {
  std::vector<int> deg(vertex_count, 0);
  for (auto [a, b] : edges) {
    deg[a] += 1;
    deg[b] += 1;
  }
  return deg;
}

bool Tree::is_valid_tree() const {
  if (vertex_count == 0) return false;
  if (static_cast<int>(edges.size()) != vertex_count - 1) return false;
  std::vector<int> parent(vertex_count);
  for (int i = 0; i < vertex_count; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = vertex_count;
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;  // cycle
    parent[ra] = rb;
    --comps;
  }
  return comps == 1;
}

RootedTree RootedTree::rooted_at(const Tree& t, int root) {
  if (!t.is_valid_tree()) throw std::invalid_argument("rooted_at: not a tree");
  if (root < 0 || root >= t.vertex_count) throw std::invalid_argument("rooted_at: root out of range");
  RootedTree r;
  r.tree = t;
  r.root = root;
  r.degree = t.degrees();
  r.leaf.resize(t.vertex_count);
  for (int v = 0; v < t.vertex_count; ++v) r.leaf[v] = r.degree[v] <= 1;
  r.parent.assign(t.vertex_count, -1);
  auto adj = t.adjacency();
  std::vector<int> stack{root};
  std::vector<char> seen(t.vertex_count, 0);
  seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      r.parent[w] = v;
      stack.push_back(w);
    }
  }
  return r;
}

double tree_lemma_bound(double M) {
  if (M <= 0) throw std::invalid_argument("tree_lemma_bound: M must be positive");
  return (M / 2.0 + 1.0) * std::exp(M / std::exp(1.0));
}

double graver_degree_bound(int n) {
  if (n < 1) throw std::invalid_argument("graver_degree_bound: n must be at least 1");
  return static_cast<double>(n) * n * std::exp(2.0 * n / std::exp(1.0));
}

LeafPathSum leaf_path_degree_sums(const Tree& t) {
  if (t.vertex_count < 3) throw std::invalid_argument("leaf_path_degree_sums: need at least 3 vertices");
  if (!t.is_valid_tree()) throw std::invalid_argument("leaf_path_degree_sums: not a tree");
  auto deg = t.degrees();
  std::vector<int> leaves;
  for (int v = 0; v < t.vertex_count; ++v)
    if (deg[v] <= 1) leaves.push_back(v);

  LeafPathSum best;
  for (size_t i = 0; i < leaves.size(); ++i) {
    // one BFS per leaf gives parents towards leaves[i]
    RootedTree r = RootedTree::rooted_at(t, leaves[i]);
    for (size_t j = i + 1; j < leaves.size(); ++j) {
      std::vector<int> path;
      int sum = 0;
      for (int v = leaves[j]; v != -1; v = r.parent[v]) path.push_back(v);
      for (size_t k = 1; k + 1 < path.size(); ++k) sum += deg[path[k]];
      if (sum > best.max_sum || best.path.empty()) {
        best.max_sum = sum;
        best.path = path;
      }
    }
  }
  return best;
}

Rational descent_probability_total(const RootedTree& t) {
  if (t.leaf[t.root]) throw std::invalid_argument("descent_probability_total: root is a leaf");
  auto adj = t.tree.adjacency();
  Rational total = 0;
  // stack of (vertex, probability of reaching it)
  std::vector<std::pair<int, Rational>> stack;
  stack.emplace_back(t.root, Rational(1));
  while (!stack.empty()) {
    auto [v, p] = stack.back();
    stack.pop_back();
    if (t.leaf[v]) {
      total += p;
      continue;
    }
    int choices = (v == t.root) ? t.degree[v] : t.degree[v] - 1;
    for (int w : adj[v]) {
      if (w == t.parent[v]) continue;
      stack.emplace_back(w, p / choices);
    }
  }
  return total;
}

bool leaf_path_product_bound_check(const RootedTree& t, double M, double eps) {
  if (t.leaf[t.root]) throw std::invalid_argument("leaf_path_product_bound_check: root is a leaf");
  double cap = std::exp(M / std::exp(1.0)) + eps;
  auto adj = t.tree.adjacency();
  // product over the internal vertices of the root-to-leaf path, leaf excluded
  std::vector<std::pair<int, double>> stack;
  stack.emplace_back(t.root, 1.0);
  while (!stack.empty()) {
    auto [v, prod] = stack.back();
    stack.pop_back();
    if (t.leaf[v]) {
      if (prod > cap) return false;
      continue;
    }
    double next = prod * t.degree[v];
    for (int w : adj[v]) {
      if (w == t.parent[v]) continue;
      stack.emplace_back(w, next);
    }
  }
  return true;
}

namespace {

// Edge sequence within a cycle block from vertex `from` to vertex `to`,
// taking the longer of the two arcs. Ties go to the arc containing the
// lowest edge index.
std::vector<int> longer_arc(const Graph& g, const Block& blk, int from, int to) {
  // walk the cycle from `from`, lowest-index edge first
  std::vector<int> order;
  std::set<int> unused(blk.edges.begin(), blk.edges.end());
  int v = from;
  std::vector<int> arrivals;  // vertex after each edge
  while (!unused.empty()) {
    int pick = -1;
    for (int e : unused) {
      auto [a, b] = g.edges[e];
      if (a == v || b == v) {
        pick = e;
        break;
      }
    }
    if (pick == -1) throw std::logic_error("longer_arc: block is not a single cycle");
    unused.erase(pick);
    order.push_back(pick);
    v = g.traverse(pick, v);
    arrivals.push_back(v);
  }
  if (v != from) throw std::logic_error("longer_arc: block is not a closed cycle");
  int split = -1;
  for (size_t i = 0; i < arrivals.size(); ++i)
    if (arrivals[i] == to) {
      split = static_cast<int>(i);
      break;
    }
  if (split == -1) throw std::logic_error("longer_arc: attachment vertex not on block");
  std::vector<int> arc1(order.begin(), order.begin() + split + 1);          // from -> to
  std::vector<int> arc2(order.rbegin(), order.rbegin() + (order.size() - split - 1));  // from -> to backwards
  if (arc1.size() != arc2.size()) return arc1.size() > arc2.size() ? arc1 : arc2;
  int min1 = *std::min_element(arc1.begin(), arc1.end());
  int min2 = *std::min_element(arc2.begin(), arc2.end());
  return min1 < min2 ? arc1 : arc2;
}

Walk block_cycle_walk(const Graph& g, const Block& blk, int start) {
  std::vector<int> order;
  std::set<int> unused(blk.edges.begin(), blk.edges.end());
  int v = start;
  while (!unused.empty()) {
    int pick = -1;
    for (int e : unused) {
      auto [a, b] = g.edges[e];
      if (a == v || b == v) {
        pick = e;
        break;
      }
    }
    if (pick == -1) throw std::logic_error("block_cycle_walk: not a cycle block");
    unused.erase(pick);
    order.push_back(pick);
    v = g.traverse(pick, v);
  }
  if (v != start) throw std::logic_error("block_cycle_walk: not closed");
  return Walk{start, std::move(order)};
}

}  // namespace

CircuitWitness circuit_from_leaf_path(const Graph& g, const PrimitiveSubgraph& P,
                                      const std::vector<int>& leaf_path_blocks) {
  if (leaf_path_blocks.size() < 2)
    throw std::invalid_argument("circuit_from_leaf_path: need a path between two leaves");
  const auto& d = P.decomposition;
  for (int end : {leaf_path_blocks.front(), leaf_path_blocks.back()}) {
    const Block& blk = d.blocks[end];
    if (blk.kind != BlockKind::Cycle)
      throw std::logic_error("circuit_from_leaf_path: leaf block is not a cycle");
    if (blk.edges.size() % 2 == 0)
      throw std::logic_error("circuit_from_leaf_path: leaf block is an even cycle");
  }

  // shared vertex of each consecutive block pair
  auto shared_vertex = [&](int a, int b) {
    for (const auto& e : P.tree.edges)
      if ((e.block_a == a && e.block_b == b) || (e.block_a == b && e.block_b == a)) return e.shared_vertex;
    throw std::invalid_argument("circuit_from_leaf_path: blocks are not adjacent in the block tree");
  };
  std::vector<int> attach;  // attach[i] joins block i-1 and block i of the path
  for (size_t i = 1; i < leaf_path_blocks.size(); ++i)
    attach.push_back(shared_vertex(leaf_path_blocks[i - 1], leaf_path_blocks[i]));

  CircuitWitness w;
  w.cycle1 = block_cycle_walk(g, d.blocks[leaf_path_blocks.front()], attach.front());
  w.cycle2 = block_cycle_walk(g, d.blocks[leaf_path_blocks.back()], attach.back());

  if (leaf_path_blocks.size() == 2) {
    w.shape = WitnessShape::SharedVertex;
    w.shared_vertex = attach[0];
  } else {
    w.shape = WitnessShape::CyclesWithPath;
    w.path_start = attach[0];
    for (size_t i = 1; i + 1 < leaf_path_blocks.size(); ++i) {
      const Block& blk = d.blocks[leaf_path_blocks[i]];
      int from = attach[i - 1], to = attach[i];
      if (from == to) throw std::logic_error("circuit_from_leaf_path: attachment vertices coincide");
      if (blk.kind == BlockKind::CutEdge) {
        w.path_edges.push_back(blk.edges[0]);
      } else {
        auto arc = longer_arc(g, blk, from, to);
        w.path_edges.insert(w.path_edges.end(), arc.begin(), arc.end());
      }
    }
  }
  w.degree = witness_degree(w);
  validate_witness(g, w);
  return w;
}

BoundReport verify_bound(const Graph& g, const GraverEnumerationCaps& caps) {
  BoundReport r;
  r.n = max_circuit_degree(g, caps.max_cycles);
  auto subgraphs = enumerate_primitive_subgraphs(g, caps);

  r.leaf_path_cap = 2 * r.n - 2;
  r.block_walk_edge_cap = 2 * r.n;
  if (r.n >= 1) {
    r.bound_value = graver_degree_bound(r.n);
    r.block_count_bound = static_cast<double>(r.n) * std::exp(2.0 * r.n / std::exp(1.0));
  }

  if (r.n == 0) {
    // no circuit: the ideal has no primitive element either, so every
    // check is vacuous unless the enumeration disagrees
    bool empty = subgraphs.empty();
    r.holds_degree_bound = r.holds_leaf_path_sum = r.holds_block_count = r.holds_block_edges = empty;
    return r;
  }

  for (const PrimitiveSubgraph& P : subgraphs) {
    int deg = graver_degree(P);
    r.max_graver_degree = std::max(r.max_graver_degree, deg);
    if (static_cast<double>(deg) > r.bound_value + kBoundTolerance) r.holds_degree_bound = false;

    r.block_count_max = std::max(r.block_count_max, P.tree.node_count);
    if (static_cast<double>(P.tree.node_count) > r.block_count_bound + kBoundTolerance)
      r.holds_block_count = false;

    for (const Block& blk : P.decomposition.blocks) {
      int walk_edges = blk.kind == BlockKind::CutEdge ? 2 : static_cast<int>(blk.edges.size());
      r.max_block_walk_edges = std::max(r.max_block_walk_edges, walk_edges);
      if (walk_edges > r.block_walk_edge_cap) r.holds_block_edges = false;
    }

    if (P.tree.node_count >= 3) {
      Tree t;
      t.vertex_count = P.tree.node_count;
      for (const auto& e : P.tree.edges) t.edges.emplace_back(e.block_a, e.block_b);
      LeafPathSum lps = leaf_path_degree_sums(t);
      r.max_leaf_path_degree_sum = std::max(r.max_leaf_path_degree_sum, lps.max_sum);
      if (lps.max_sum > r.leaf_path_cap) r.holds_leaf_path_sum = false;
    }
  }
  return r;
}

}  // namespace toric
