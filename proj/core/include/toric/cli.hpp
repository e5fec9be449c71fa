#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "toric/cycles.hpp"

namespace toric {

/// Batch configuration shared by all subcommands. Identical configs give
/// byte-identical output.
struct RunConfig {
  std::string command;               // circuits | graver | verify | oracle | crosscheck
  std::vector<std::string> inputs;   // graph files
  std::string matrix_path;           // oracle: matrix JSON instead of a graph
  std::string expected_path;         // crosscheck: compare against stored sets
  std::string report_path;           // verify: evaluate a stored report's flags
  std::string out_path;              // empty = stdout
  std::string format = "json";       // json | text
  std::int64_t max_cycles = kDefaultCycleCap;
  std::int64_t max_graver = 100'000;
  std::int64_t max_states = 1'000'000;
  std::uint64_t seed = 0;
  int corpus_size = 0;               // verify/crosscheck: random multigraphs to generate
  int corpus_max_vertices = 7;
  int corpus_max_edges = 10;
  int exhaustive_max_vertices = 0;   // crosscheck: also sweep all small graphs
  int exhaustive_max_edges = 9;
};

/// Exit codes: 0 success, 1 property violation, 2 input error,
/// 3 cap exceeded.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitInputError = 2,
  kExitCapExceeded = 3,
};

/// Runs one subcommand, writing the report to `out` and diagnostics to
/// `err`. Never throws; failures map onto the exit codes above.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace toric
