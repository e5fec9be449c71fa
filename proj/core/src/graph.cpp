#include "toric/graph.hpp"

#include <sstream>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

int Graph::traverse(int e, int v) const {
  auto [a, b] = edges[e];
  if (v == a) return b;
  if (v == b) return a;
  throw std::invalid_argument("traverse: vertex is not an endpoint of the edge");
}

std::vector<std::vector<int>> Graph::incidence_lists() const {
  std::vector<std::vector<int>> inc(vertex_count);
  for (int e = 0; e < edge_count(); ++e) {
    inc[edges[e].first].push_back(e);
    if (!is_loop(e)) inc[edges[e].second].push_back(e);
  }
  return inc;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Graph g;
  bool have_n = false;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!have_n) {
      int n;
      if (!(ls >> n)) {
        std::string tok;
        if (ls.clear(), ls.str(line), ls >> tok)
          throw ParseError("line " + std::to_string(lineno) + ": expected vertex count");
        continue;  // blank or comment before the header
      }
      std::string extra;
      if (ls >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after vertex count");
      if (n < 0) throw ParseError("line " + std::to_string(lineno) + ": negative vertex count");
      g.vertex_count = n;
      have_n = true;
      continue;
    }
    int a, b;
    if (!(ls >> a)) continue;  // blank line
    if (!(ls >> b)) throw ParseError("line " + std::to_string(lineno) + ": expected two vertex indices");
    std::string extra;
    if (ls >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after edge");
    if (a < 0 || a >= g.vertex_count || b < 0 || b >= g.vertex_count)
      throw ParseError("line " + std::to_string(lineno) + ": vertex index out of range [0," +
                       std::to_string(g.vertex_count) + ")");
    g.edges.emplace_back(a, b);
  }
  if (!have_n) throw ParseError("empty graph document");
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count << "\n";
  for (auto [a, b] : g.edges) os << a << " " << b << "\n";
  return os.str();
}

IntegerMatrix incidence_matrix(const Graph& g) {
  IntegerMatrix A(g.vertex_count, g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edges[e];
    if (a == b)
      A.at(a, e) = 2;  // loop column
    else {
      A.at(a, e) = 1;
      A.at(b, e) = 1;
    }
  }
  return A;
}

std::vector<int> component_labels(const Graph& g, int skip_vertex) {
  std::vector<int> label(g.vertex_count, -2);
  if (skip_vertex >= 0) label[skip_vertex] = -1;
  auto inc = g.incidence_lists();
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count; ++s) {
    if (label[s] != -2) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : inc[v]) {
        int w = g.traverse(e, v);
        if (w == skip_vertex || label[w] != -2) continue;
        label[w] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count <= 1) return true;
  auto label = component_labels(g);
  for (int v = 0; v < g.vertex_count; ++v)
    if (label[v] != 0) return false;
  return true;
}

}  // namespace toric
