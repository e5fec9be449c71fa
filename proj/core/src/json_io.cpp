#include "toric/json_io.hpp"

#include <limits>

#include "toric/errors.hpp"
#include "toric/walk.hpp"

namespace toric {

json int_to_json(const Int& x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x < lo || x > hi) throw std::range_error("integer too large for JSON serialization: " + x.str());
  return static_cast<std::int64_t>(x);
}

Int int_from_json(const json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer");
  return Int(j.get<std::int64_t>());
}

json to_json(const ExponentVector& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

static ExponentVector exponents_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  ExponentVector v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

json to_json(const Binomial& b) {
  return json{{"plus", to_json(b.plus)}, {"minus", to_json(b.minus)}};
}

Binomial binomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("plus") || !j.contains("minus"))
    throw ParseError("binomial JSON needs 'plus' and 'minus'");
  return Binomial{exponents_from_json(j["plus"]), exponents_from_json(j["minus"])};
}

json to_json(const BinomialSet& s) {
  json a = json::array();
  for (const Binomial& b : s) a.push_back(to_json(b));
  return a;
}

BinomialSet binomial_set_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of binomials");
  BinomialSet s;
  for (const auto& b : j) s.insert(binomial_from_json(b).canonical());
  return s;
}

json to_json(const IntegerMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntegerMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError("matrix JSON needs 'rows', 'cols', 'entries'");
  int rows = j["rows"].get<int>();
  int cols = j["cols"].get<int>();
  if (rows < 0 || cols < 0) throw ParseError("matrix dimensions must be nonnegative");
  const json& entries = j["entries"];
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    throw ParseError("matrix entries must hold exactly 'rows' rows");
  IntegerMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || static_cast<int>(entries[i].size()) != cols)
      throw ParseError("matrix row " + std::to_string(i) + " must hold exactly 'cols' integers");
    for (int c = 0; c < cols; ++c) m.at(i, c) = int_from_json(entries[i][c]);
  }
  return m;
}

json to_json(const KernelLattice& k) {
  json basis = json::array();
  for (const SignedVector& v : k.basis) basis.push_back(to_json(v));
  return json{{"rank", k.rank()}, {"basis", std::move(basis)}};
}

json to_json(const Graph& g, const CircuitWitness& w) {
  json cycles = json::array();
  cycles.push_back(w.cycle1.edge_sequence);
  if (w.shape != WitnessShape::EvenCycle) cycles.push_back(w.cycle2.edge_sequence);
  const char* shape = w.shape == WitnessShape::EvenCycle     ? "even_cycle"
                      : w.shape == WitnessShape::SharedVertex ? "shared_vertex"
                                                              : "cycles_with_path";
  json out{{"shape", shape},
           {"cycles", std::move(cycles)},
           {"path", w.path_edges},
           {"degree", w.degree},
           {"binomial", to_json(walk_binomial(g, witness_to_walk(g, w)).canonical())}};
  if (w.shape == WitnessShape::SharedVertex) out["vertex"] = w.shared_vertex;
  return out;
}

json to_json(const Graph& g, const PrimitiveSubgraph& p) {
  json blocks = json::array();
  for (const Block& b : p.decomposition.blocks) {
    blocks.push_back(json{{"edges", b.edges},
                          {"kind", b.kind == BlockKind::Cycle ? "cycle" : b.kind == BlockKind::CutEdge ? "cut_edge" : "other"}});
  }
  return json{{"edges", p.edges},
              {"blocks", std::move(blocks)},
              {"degree", graver_degree(p)},
              {"binomial", to_json(walk_binomial(g, primitive_walk(g, p)).canonical())}};
}

json to_json(const BoundReport& r) {
  return json{{"n", r.n},
              {"max_graver_degree", r.max_graver_degree},
              {"bound_value", r.bound_value},
              {"block_count_max", r.block_count_max},
              {"block_count_bound", r.block_count_bound},
              {"max_leaf_path_degree_sum", r.max_leaf_path_degree_sum},
              {"leaf_path_cap", r.leaf_path_cap},
              {"max_block_walk_edges", r.max_block_walk_edges},
              {"block_walk_edge_cap", r.block_walk_edge_cap},
              {"holds",
               {{"degree_bound", r.holds_degree_bound},
                {"leaf_path_sum", r.holds_leaf_path_sum},
                {"block_count", r.holds_block_count},
                {"block_edges", r.holds_block_edges}}},
              {"all_hold", r.all_hold()}};
}

BoundReport bound_report_from_json(const json& j) {
  if (!j.is_object() || !j.contains("holds")) throw ParseError("bound report JSON needs 'holds'");
  BoundReport r;
  r.n = j.value("n", 0);
  r.max_graver_degree = j.value("max_graver_degree", 0);
  r.bound_value = j.value("bound_value", 0.0);
  r.block_count_max = j.value("block_count_max", 0);
  r.block_count_bound = j.value("block_count_bound", 0.0);
  r.max_leaf_path_degree_sum = j.value("max_leaf_path_degree_sum", 0);
  r.leaf_path_cap = j.value("leaf_path_cap", 0);
  r.max_block_walk_edges = j.value("max_block_walk_edges", 0);
  r.block_walk_edge_cap = j.value("block_walk_edge_cap", 0);
  const json& h = j["holds"];
  r.holds_degree_bound = h.value("degree_bound", false);
  r.holds_leaf_path_sum = h.value("leaf_path_sum", false);
  r.holds_block_count = h.value("block_count", false);
  r.holds_block_edges = h.value("block_edges", false);
  return r;
}

}  // namespace toric
