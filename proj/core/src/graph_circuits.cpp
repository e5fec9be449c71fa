#include "toric/graph_circuits.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "toric/errors.hpp"

namespace toric {

namespace {

std::set<int> vertex_set(const Graph& g, const Walk& w) {
  auto vs = walk_vertices(g, w);
  return std::set<int>(vs.begin(), vs.end() - 1);  // closed walk repeats the start
}

// Rotates a simple cycle so the traversal starts at `v`.
Walk rotate_cycle(const Graph& g, const Walk& c, int v) {
  auto vs = walk_vertices(g, c);
  for (int i = 0; i < c.length(); ++i) {
    if (vs[i] != v) continue;
    Walk r;
    r.start_vertex = v;
    r.edge_sequence.insert(r.edge_sequence.end(), c.edge_sequence.begin() + i, c.edge_sequence.end());
    r.edge_sequence.insert(r.edge_sequence.end(), c.edge_sequence.begin(), c.edge_sequence.begin() + i);
    return r;
  }
  throw std::invalid_argument("rotate_cycle: vertex not on cycle");
}

struct PathSearch {
  const Graph& g;
  const std::vector<std::vector<int>>& inc;
  const std::set<int>& c1_vertices;
  const std::set<int>& c2_vertices;
  int depth_cap;
  std::vector<char> visited;
  std::vector<int> edges;
  std::vector<std::vector<int>>& found;

  void dfs(int v) {
    if (static_cast<int>(edges.size()) >= depth_cap) return;
    for (int e : inc[v]) {
      if (g.is_loop(e)) continue;
      int w = g.traverse(e, v);
      if (c2_vertices.count(w)) {
        edges.push_back(e);
        found.push_back(edges);
        edges.pop_back();
        continue;
      }
      if (c1_vertices.count(w) || visited[w]) continue;
      visited[w] = 1;
      edges.push_back(e);
      dfs(w);
      edges.pop_back();
      visited[w] = 0;
    }
  }
};

}  // namespace

int witness_degree(const CircuitWitness& w) {
  switch (w.shape) {
    case WitnessShape::EvenCycle:
      return w.cycle1.length() / 2;
    case WitnessShape::SharedVertex:
      return (w.cycle1.length() + w.cycle2.length()) / 2;
    case WitnessShape::CyclesWithPath:
      return (w.cycle1.length() + w.cycle2.length()) / 2 + static_cast<int>(w.path_edges.size());
  }
  throw std::logic_error("unreachable");
}

void validate_witness(const Graph& g, const CircuitWitness& w) {
  auto check_simple_cycle = [&](const Walk& c) {
    if (c.length() == 0) throw std::invalid_argument("witness: empty cycle");
    auto vs = walk_vertices(g, c);
    if (vs.back() != c.start_vertex) throw std::invalid_argument("witness: cycle not closed");
    std::set<int> distinct(vs.begin(), vs.end() - 1);
    if (static_cast<int>(distinct.size()) != c.length()) throw std::invalid_argument("witness: cycle not simple");
    std::set<int> es(c.edge_sequence.begin(), c.edge_sequence.end());
    if (static_cast<int>(es.size()) != c.length()) throw std::invalid_argument("witness: repeated cycle edge");
  };
  switch (w.shape) {
    case WitnessShape::EvenCycle:
      check_simple_cycle(w.cycle1);
      if (w.cycle1.length() % 2 != 0) throw std::invalid_argument("witness: even-cycle shape with odd cycle");
      break;
    case WitnessShape::SharedVertex: {
      check_simple_cycle(w.cycle1);
      check_simple_cycle(w.cycle2);
      if (w.cycle1.length() % 2 == 0 || w.cycle2.length() % 2 == 0)
        throw std::invalid_argument("witness: shared-vertex cycles must both be odd");
      auto v1 = vertex_set(g, w.cycle1), v2 = vertex_set(g, w.cycle2);
      std::vector<int> common;
      std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(common));
      if (common.size() != 1 || common[0] != w.shared_vertex)
        throw std::invalid_argument("witness: cycles must meet in exactly the named vertex");
      for (int e : w.cycle1.edge_sequence)
        for (int f : w.cycle2.edge_sequence)
          if (e == f) throw std::invalid_argument("witness: cycles share an edge");
      break;
    }
    case WitnessShape::CyclesWithPath: {
      check_simple_cycle(w.cycle1);
      check_simple_cycle(w.cycle2);
      if (w.cycle1.length() % 2 == 0 || w.cycle2.length() % 2 == 0)
        throw std::invalid_argument("witness: path-joined cycles must both be odd");
      if (w.path_edges.empty()) throw std::invalid_argument("witness: empty connecting path");
      auto v1 = vertex_set(g, w.cycle1), v2 = vertex_set(g, w.cycle2);
      for (int v : v1)
        if (v2.count(v)) throw std::invalid_argument("witness: path-joined cycles must be vertex-disjoint");
      Walk path{w.path_start, w.path_edges};
      auto pv = walk_vertices(g, path);
      std::set<int> distinct(pv.begin(), pv.end());
      if (distinct.size() != pv.size()) throw std::invalid_argument("witness: connecting path not simple");
      if (!v1.count(pv.front()) || !v2.count(pv.back()))
        throw std::invalid_argument("witness: path endpoints must lie on the cycles");
      for (size_t i = 1; i + 1 < pv.size(); ++i)
        if (v1.count(pv[i]) || v2.count(pv[i]))
          throw std::invalid_argument("witness: path interior touches a cycle");
      break;
    }
  }
}

Walk witness_to_walk(const Graph& g, const CircuitWitness& w) {
  switch (w.shape) {
    case WitnessShape::EvenCycle:
      return w.cycle1;
    case WitnessShape::SharedVertex: {
      Walk a = rotate_cycle(g, w.cycle1, w.shared_vertex);
      Walk b = rotate_cycle(g, w.cycle2, w.shared_vertex);
      Walk out = a;
      out.edge_sequence.insert(out.edge_sequence.end(), b.edge_sequence.begin(), b.edge_sequence.end());
      return out;
    }
    case WitnessShape::CyclesWithPath: {
      Walk path{w.path_start, w.path_edges};
      auto pv = walk_vertices(g, path);
      Walk a = rotate_cycle(g, w.cycle1, pv.front());
      Walk b = rotate_cycle(g, w.cycle2, pv.back());
      Walk out = a;
      out.edge_sequence.insert(out.edge_sequence.end(), w.path_edges.begin(), w.path_edges.end());
      out.edge_sequence.insert(out.edge_sequence.end(), b.edge_sequence.begin(), b.edge_sequence.end());
      out.edge_sequence.insert(out.edge_sequence.end(), w.path_edges.rbegin(), w.path_edges.rend());
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<CircuitWitness> enumerate_circuit_witnesses(const Graph& g, std::int64_t cap) {
  std::vector<Walk> cycles = enumerate_simple_cycles(g, cap);
  auto inc = g.incidence_lists();

  std::vector<std::set<int>> vsets;
  vsets.reserve(cycles.size());
  for (const Walk& c : cycles) vsets.push_back(vertex_set(g, c));

  std::vector<CircuitWitness> out;
  BinomialSet seen;
  auto emit = [&](CircuitWitness w) {
    w.degree = witness_degree(w);
    Binomial b = walk_binomial(g, witness_to_walk(g, w)).canonical();
    if (!seen.insert(b).second) return;
    if (static_cast<std::int64_t>(out.size()) >= cap)
      throw CapExceeded("enumerate_circuit_witnesses: more than " + std::to_string(cap) + " witnesses");
    out.push_back(std::move(w));
  };

  for (const Walk& c : cycles) {
    if (c.length() % 2 != 0) continue;
    CircuitWitness w;
    w.shape = WitnessShape::EvenCycle;
    w.cycle1 = c;
    emit(std::move(w));
  }

  for (size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].length() % 2 == 0) continue;
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      if (cycles[j].length() % 2 == 0) continue;
      std::vector<int> common;
      std::set_intersection(vsets[i].begin(), vsets[i].end(), vsets[j].begin(), vsets[j].end(),
                            std::back_inserter(common));
      if (common.size() == 1) {
        CircuitWitness w;
        w.shape = WitnessShape::SharedVertex;
        w.cycle1 = cycles[i];
        w.cycle2 = cycles[j];
        w.shared_vertex = common[0];
        emit(std::move(w));
      } else if (common.empty()) {
        std::vector<std::vector<int>> paths;
        PathSearch search{g,         inc, vsets[i], vsets[j], g.edge_count(),
                          std::vector<char>(g.vertex_count, 0), {}, paths};
        for (int a : vsets[i]) search.dfs(a);
        for (auto& pe : paths) {
          CircuitWitness w;
          w.shape = WitnessShape::CyclesWithPath;
          w.cycle1 = cycles[i];
          w.cycle2 = cycles[j];
          w.path_edges = pe;
          // recover the cycle1 endpoint of the path
          auto [x, y] = g.edges[pe[0]];
          w.path_start = vsets[i].count(x) ? x : y;
          emit(std::move(w));
        }
      }
    }
  }
  return out;
}

BinomialSet circuit_binomials(const Graph& g, std::int64_t cap) {
  BinomialSet out;
  for (const CircuitWitness& w : enumerate_circuit_witnesses(g, cap))
    out.insert(walk_binomial(g, witness_to_walk(g, w)).canonical());
  return out;
}

int max_circuit_degree(const Graph& g, std::int64_t cap) {
  int n = 0;
  for (const CircuitWitness& w : enumerate_circuit_witnesses(g, cap)) n = std::max(n, w.degree);
  return n;
}

}  // namespace toric
