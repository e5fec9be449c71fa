#include <iostream>

#include "CLI11.hpp"
#include "toric/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"circuits, Graver bases and degree-bound checks for toric ideals of graphs"};
  app.require_subcommand(1);

  toric::RunConfig cfg;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", cfg.inputs, "graph file (repeatable)");
    cmd->add_option("-f,--format", cfg.format, "output format: json or text")->capture_default_str();
    cmd->add_option("-o,--out", cfg.out_path, "write the report to a file instead of stdout");
    cmd->add_option("--max-cycles", cfg.max_cycles, "simple-cycle enumeration cap")->capture_default_str();
    cmd->add_option("--max-graver", cfg.max_graver, "Graver element cap")->capture_default_str();
    cmd->add_option("--max-states", cfg.max_states, "subgraph-composer state cap")->capture_default_str();
  };
  auto add_corpus = [&](CLI::App* cmd) {
    cmd->add_option("--seed", cfg.seed, "seed for generated corpora")->capture_default_str();
    cmd->add_option("--corpus-size", cfg.corpus_size, "number of random multigraphs to generate");
    cmd->add_option("--corpus-max-vertices", cfg.corpus_max_vertices)->capture_default_str();
    cmd->add_option("--corpus-max-edges", cfg.corpus_max_edges)->capture_default_str();
  };

  CLI::App* circuits = app.add_subcommand("circuits", "enumerate the circuits of a graph ideal");
  add_common(circuits);

  CLI::App* graver = app.add_subcommand("graver", "enumerate the Graver basis of a graph ideal");
  add_common(graver);

  CLI::App* verify = app.add_subcommand("verify", "check the degree bound and its proof quantities");
  add_common(verify);
  add_corpus(verify);
  verify->add_option("--check-report", cfg.report_path, "evaluate the flags of a stored report JSON");

  CLI::App* oracle = app.add_subcommand("oracle", "matrix-level kernel, Graver basis and circuits");
  add_common(oracle);
  oracle->add_option("-m,--matrix", cfg.matrix_path, "matrix JSON instead of a graph file");

  CLI::App* crosscheck = app.add_subcommand("crosscheck", "graph-level results against the lattice oracle");
  add_common(crosscheck);
  add_corpus(crosscheck);
  crosscheck->add_option("--expected", cfg.expected_path, "compare against stored Graver/circuit sets");
  crosscheck->add_option("--exhaustive-max-vertices", cfg.exhaustive_max_vertices,
                         "also sweep every connected simple graph up to this order");
  crosscheck->add_option("--exhaustive-max-edges", cfg.exhaustive_max_edges)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // CLI11 uses 0 for --help; anything else is a usage error
    return code == 0 ? 0 : toric::kExitInputError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  return toric::run_command(cfg, std::cout, std::cerr);
}
