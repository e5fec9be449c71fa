#include "toric/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "toric/corpus.hpp"
#include "toric/errors.hpp"
#include "toric/json_io.hpp"
#include "toric/matrix_circuits.hpp"
#include "toric/pottier.hpp"

namespace toric {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraverEnumerationCaps caps_of(const RunConfig& c) {
  return GraverEnumerationCaps{c.max_cycles, c.max_graver, c.max_states};
}

// Inputs: named files, then generated corpus graphs (seeded), then an
// exhaustive sweep when requested.
struct NamedGraph {
  std::string name;
  Graph graph;
};

std::vector<NamedGraph> gather_inputs(const RunConfig& c, bool allow_generated) {
  std::vector<NamedGraph> out;
  for (const auto& path : c.inputs) {
    if (std::filesystem::is_directory(path)) {
      std::vector<std::string> files;
      for (const auto& entry : std::filesystem::directory_iterator(path))
        if (entry.is_regular_file() && entry.path().extension() == ".graph")
          files.push_back(entry.path().string());
      std::sort(files.begin(), files.end());
      if (files.empty()) throw ParseError("no .graph files in directory: " + path);
      for (const auto& f : files) out.push_back({f, parse_graph(slurp(f))});
    } else {
      out.push_back({path, parse_graph(slurp(path))});
    }
  }
  if (!allow_generated) return out;
  if (c.corpus_size > 0) {
    Rng rng(c.seed);
    for (int i = 0; i < c.corpus_size; ++i) {
      Graph g = random_connected_multigraph(rng, c.corpus_max_vertices, c.corpus_max_edges);
      out.push_back({"random[" + std::to_string(i) + "]", std::move(g)});
    }
  }
  if (c.exhaustive_max_vertices > 0) {
    auto all = exhaustive_connected_graphs(c.exhaustive_max_vertices, c.exhaustive_max_edges);
    for (size_t i = 0; i < all.size(); ++i)
      out.push_back({"exhaustive[" + std::to_string(i) + "]", std::move(all[i])});
  }
  return out;
}

// Per-input jobs are independent; a small worker pool runs them and the
// results are reported in input order regardless of completion order.
template <typename Result>
std::vector<Result> map_inputs(const std::vector<NamedGraph>& inputs,
                               const std::function<Result(const NamedGraph&)>& job) {
  std::vector<Result> results(inputs.size());
  std::vector<std::exception_ptr> errors(inputs.size());
  std::atomic<size_t> next{0};
  unsigned workers = std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()), inputs.size());
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= inputs.size()) return;
        try {
          results[i] = job(inputs[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

void write_output(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw ParseError("cannot write file: " + c.out_path);
  f << text;
}

std::string render(const RunConfig& c, const json& doc, const std::function<std::string(const json&)>& text_renderer) {
  if (c.format == "json") return doc.dump(2) + "\n";
  return text_renderer(doc);
}

int cmd_circuits(const RunConfig& c, std::ostream& out) {
  auto inputs = gather_inputs(c, false);
  if (inputs.empty()) throw ParseError("circuits: no --input given");
  std::function<json(const NamedGraph&)> job = [&](const NamedGraph& in) {
    json witnesses = json::array();
    int n = 0;
    for (const CircuitWitness& w : enumerate_circuit_witnesses(in.graph, c.max_cycles)) {
      witnesses.push_back(to_json(in.graph, w));
      n = std::max(n, w.degree);
    }
    return json{{"input", in.name},
                {"count", witnesses.size()},
                {"max_circuit_degree", n},
                {"circuits", std::move(witnesses)}};
  };
  auto results = map_inputs(inputs, job);
  json doc = results.size() == 1 ? results[0] : json{{"results", results}};
  write_output(c, render(c, doc, [](const json& d) {
    std::ostringstream os;
    auto one = [&os](const json& r) {
      os << r["input"].get<std::string>() << ": " << r["count"] << " circuits, max degree "
         << r["max_circuit_degree"] << "\n";
      for (const auto& w : r["circuits"])
        os << "  " << w["shape"].get<std::string>() << " degree " << w["degree"] << " binomial "
           << w["binomial"].dump() << "\n";
    };
    if (d.contains("results"))
      for (const auto& r : d["results"]) one(r);
    else
      one(d);
    return os.str();
  }), out);
  return kExitOk;
}

int cmd_graver(const RunConfig& c, std::ostream& out) {
  auto inputs = gather_inputs(c, false);
  if (inputs.empty()) throw ParseError("graver: no --input given");
  std::function<json(const NamedGraph&)> job = [&](const NamedGraph& in) {
    json elements = json::array();
    int max_degree = 0;
    for (const PrimitiveSubgraph& p : enumerate_primitive_subgraphs(in.graph, caps_of(c))) {
      elements.push_back(to_json(in.graph, p));
      max_degree = std::max(max_degree, graver_degree(p));
    }
    return json{{"input", in.name},
                {"count", elements.size()},
                {"max_degree", max_degree},
                {"elements", std::move(elements)}};
  };
  auto results = map_inputs(inputs, job);
  json doc = results.size() == 1 ? results[0] : json{{"results", results}};
  write_output(c, render(c, doc, [](const json& d) {
    std::ostringstream os;
    auto one = [&os](const json& r) {
      os << r["input"].get<std::string>() << ": " << r["count"] << " Graver elements, max degree "
         << r["max_degree"] << "\n";
      for (const auto& e : r["elements"])
        os << "  degree " << e["degree"] << " edges " << e["edges"].dump() << " binomial "
           << e["binomial"].dump() << "\n";
    };
    if (d.contains("results"))
      for (const auto& r : d["results"]) one(r);
    else
      one(d);
    return os.str();
  }), out);
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  if (!c.report_path.empty()) {
    // plumbing path: evaluate the flags of a stored report
    BoundReport r = bound_report_from_json(json::parse(slurp(c.report_path), nullptr, true, true));
    write_output(c, to_json(r).dump(2) + "\n", out);
    return r.all_hold() ? kExitOk : kExitViolation;
  }
  auto inputs = gather_inputs(c, true);
  if (inputs.empty()) throw ParseError("verify: no --input and no --corpus-size given");
  std::function<json(const NamedGraph&)> job = [&](const NamedGraph& in) {
    BoundReport r = verify_bound(in.graph, caps_of(c));
    json j = to_json(r);
    j["input"] = in.name;
    return j;
  };
  auto results = map_inputs(inputs, job);
  bool ok = true;
  for (const auto& r : results) ok = ok && r["all_hold"].get<bool>();
  json doc = results.size() == 1 ? results[0] : json{{"all_hold", ok}, {"results", results}};
  write_output(c, render(c, doc, [](const json& d) {
    std::ostringstream os;
    auto one = [&os](const json& r) {
      os << r["input"].get<std::string>() << ": n=" << r["n"] << " max Graver degree "
         << r["max_graver_degree"] << " bound " << r["bound_value"] << " -> "
         << (r["all_hold"].get<bool>() ? "ok" : "VIOLATION") << "\n";
    };
    if (d.contains("results"))
      for (const auto& r : d["results"]) one(r);
    else
      one(d);
    return os.str();
  }), out);
  return ok ? kExitOk : kExitViolation;
}

int cmd_oracle(const RunConfig& c, std::ostream& out) {
  if (!c.matrix_path.empty() && !c.inputs.empty())
    throw ParseError("oracle: give either --input (graph) or --matrix, not both");
  IntegerMatrix A;
  std::string name;
  if (!c.matrix_path.empty()) {
    A = matrix_from_json(json::parse(slurp(c.matrix_path), nullptr, true, true));
    name = c.matrix_path;
  } else if (c.inputs.size() == 1) {
    A = incidence_matrix(parse_graph(slurp(c.inputs[0])));
    name = c.inputs[0];
  } else {
    throw ParseError("oracle: need exactly one --input or --matrix");
  }
  if (A.cols() > 22)
    throw ParseError("oracle: the circuit subset scan is limited to 22 columns, got " +
                     std::to_string(A.cols()));
  KernelLattice k = integer_kernel_basis(A);
  BinomialSet graver = graver_basis(A, PottierCaps{c.max_graver, 10'000'000});
  BinomialSet circuits = circuits_of_matrix(A);
  json doc{{"input", name},
           {"rows", A.rows()},
           {"cols", A.cols()},
           {"kernel", to_json(k)},
           {"graver_count", graver.size()},
           {"graver", to_json(graver)},
           {"circuit_count", circuits.size()},
           {"circuits", to_json(circuits)}};
  write_output(c, render(c, doc, [](const json& d) {
    std::ostringstream os;
    os << d["input"].get<std::string>() << ": kernel rank " << d["kernel"]["rank"] << ", "
       << d["graver_count"] << " Graver elements, " << d["circuit_count"] << " circuits\n";
    return os.str();
  }), out);
  return kExitOk;
}

int cmd_crosscheck(const RunConfig& c, std::ostream& out) {
  auto inputs = gather_inputs(c, true);
  if (inputs.empty()) throw ParseError("crosscheck: no inputs, corpus, or exhaustive sweep requested");

  BinomialSet expected_graver, expected_circuits;
  bool have_expected = false;
  if (!c.expected_path.empty()) {
    if (inputs.size() != 1) throw ParseError("crosscheck: --expected needs exactly one input graph");
    json e = json::parse(slurp(c.expected_path), nullptr, true, true);
    if (e.contains("graver")) expected_graver = binomial_set_from_json(e["graver"]);
    if (e.contains("circuits")) expected_circuits = binomial_set_from_json(e["circuits"]);
    have_expected = true;
  }

  std::function<json(const NamedGraph&)> job = [&](const NamedGraph& in) {
    BinomialSet g_graver = graver_basis_graph(in.graph, caps_of(c));
    BinomialSet g_circuits = circuit_binomials(in.graph, c.max_cycles);
    BinomialSet o_graver, o_circuits;
    if (have_expected) {
      o_graver = expected_graver;
      o_circuits = expected_circuits;
    } else {
      IntegerMatrix A = incidence_matrix(in.graph);
      o_graver = graver_basis(A, PottierCaps{c.max_graver, 10'000'000});
      o_circuits = circuits_of_matrix(A);
    }
    json j{{"input", in.name},
           {"graver_count", g_graver.size()},
           {"circuit_count", g_circuits.size()},
           {"graver_match", g_graver == o_graver},
           {"circuits_match", g_circuits == o_circuits}};
    if (g_graver != o_graver) {
      j["graph_graver"] = to_json(g_graver);
      j["oracle_graver"] = to_json(o_graver);
    }
    if (g_circuits != o_circuits) {
      j["graph_circuits"] = to_json(g_circuits);
      j["oracle_circuits"] = to_json(o_circuits);
    }
    return j;
  };
  auto results = map_inputs(inputs, job);

  json mismatches = json::array();
  for (const auto& r : results)
    if (!r["graver_match"].get<bool>() || !r["circuits_match"].get<bool>()) mismatches.push_back(r);
  json doc{{"graphs", inputs.size()}, {"mismatch_count", mismatches.size()}, {"mismatches", mismatches}};
  write_output(c, render(c, doc, [](const json& d) {
    std::ostringstream os;
    os << d["graphs"] << " graphs checked, " << d["mismatch_count"] << " mismatches\n";
    for (const auto& m : d["mismatches"]) os << "  MISMATCH " << m["input"].get<std::string>() << "\n";
    return os.str();
  }), out);
  return mismatches.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "json" && config.format != "text") throw ParseError("unknown --format: " + config.format);
    if (config.command == "circuits") return cmd_circuits(config, out);
    if (config.command == "graver") return cmd_graver(config, out);
    if (config.command == "verify") return cmd_verify(config, out);
    if (config.command == "oracle") return cmd_oracle(config, out);
    if (config.command == "crosscheck") return cmd_crosscheck(config, out);
    throw ParseError("unknown command: " + config.command);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const json::exception& e) {
    err << "error: invalid JSON: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace toric
