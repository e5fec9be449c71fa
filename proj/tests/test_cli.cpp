#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "toric/cli.hpp"

using namespace toric;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("toricgraph_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& content) const {
    fs::path p = dir / name;
    std::ofstream(p) << content;
    return p.string();
  }
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(RunConfig cfg) {
  std::ostringstream out, err;
  int code = run_command(cfg, out, err);
  return {code, out.str(), err.str()};
}

const char* kFourCycle = "4\n0 1\n1 2\n2 3\n3 0\n";

}  // namespace

TEST_CASE("circuits and graver commands on the 4-cycle") {
  TempDir tmp;
  std::string path = tmp.file("c4.graph", kFourCycle);

  RunConfig cfg;
  cfg.command = "circuits";
  cfg.inputs = {path};
  RunResult r = run(cfg);
  CHECK(r.code == kExitOk);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["count"] == 1);
  CHECK(doc["max_circuit_degree"] == 2);
  CHECK(doc["circuits"][0]["binomial"]["plus"] == nlohmann::json::array({1, 0, 1, 0}));

  cfg.command = "graver";
  RunResult g = run(cfg);
  CHECK(g.code == kExitOk);
  auto gdoc = nlohmann::json::parse(g.out);
  CHECK(gdoc["count"] == 1);
  CHECK(gdoc["elements"][0]["degree"] == 2);

  cfg.format = "text";
  RunResult t = run(cfg);
  CHECK(t.code == kExitOk);
  CHECK(t.out.find("1 Graver elements") != std::string::npos);
}

TEST_CASE("graver on the bowtie reports the degree-3 circuit") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = "graver";
  cfg.inputs = {tmp.file("bowtie.graph", "5\n0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n")};
  RunResult r = run(cfg);
  CHECK(r.code == kExitOk);
  auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["count"] == 1);
  CHECK(doc["elements"][0]["degree"] == 3);
  CHECK(doc["elements"][0]["binomial"]["plus"] == nlohmann::json::array({1, 0, 0, 1, 0, 1}));
}

TEST_CASE("empty results and input errors") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = "circuits";
  cfg.inputs = {tmp.file("tree.graph", "3\n0 1\n1 2\n")};
  RunResult r = run(cfg);
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["count"] == 0);

  cfg.inputs = {tmp.file("bad.graph", "3\n0 7\n")};
  RunResult bad = run(cfg);
  CHECK(bad.code == kExitInputError);
  CHECK(bad.err.find("error") != std::string::npos);

  cfg.inputs = {(tmp.dir / "missing.graph").string()};
  CHECK(run(cfg).code == kExitInputError);

  RunConfig none;
  none.command = "graver";
  CHECK(run(none).code == kExitInputError);

  RunConfig unknown;
  unknown.command = "nonsense";
  CHECK(run(unknown).code == kExitInputError);
}

TEST_CASE("caps map to exit 3") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = "graver";
  cfg.inputs = {tmp.file("k4.graph", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")};
  cfg.max_graver = 1;
  CHECK(run(cfg).code == kExitCapExceeded);
}

TEST_CASE("verify command and the stored-report plumbing") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = "verify";
  cfg.inputs = {tmp.file("c4.graph", kFourCycle)};
  RunResult r = run(cfg);
  CHECK(r.code == kExitOk);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["all_hold"] == true);
  CHECK(doc["n"] == 2);

  // hand-edited report with a failed flag exits 1
  doc["holds"]["degree_bound"] = false;
  RunConfig check;
  check.command = "verify";
  check.report_path = tmp.file("bad_report.json", doc.dump());
  CHECK(run(check).code == kExitViolation);

  doc["holds"]["degree_bound"] = true;
  check.report_path = tmp.file("good_report.json", doc.dump());
  CHECK(run(check).code == kExitOk);
}

TEST_CASE("oracle command accepts a graph or a matrix, not both") {
  TempDir tmp;
  std::string graph = tmp.file("c4.graph", kFourCycle);
  std::string matrix = tmp.file("triangle.json",
                                R"({"rows":3,"cols":3,"entries":[[1,0,1],[1,1,0],[0,1,1]]})");

  RunConfig cfg;
  cfg.command = "oracle";
  cfg.inputs = {graph};
  RunResult r = run(cfg);
  CHECK(r.code == kExitOk);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["graver_count"] == 1);
  CHECK(doc["kernel"]["rank"] == 1);

  RunConfig m;
  m.command = "oracle";
  m.matrix_path = matrix;
  RunResult rm = run(m);
  CHECK(rm.code == kExitOk);
  CHECK(nlohmann::json::parse(rm.out)["graver_count"] == 0);  // odd cycle, trivial kernel

  RunConfig both;
  both.command = "oracle";
  both.inputs = {graph};
  both.matrix_path = matrix;
  CHECK(run(both).code == kExitInputError);
}

TEST_CASE("crosscheck agrees with the oracle and flags injected bugs") {
  TempDir tmp;
  std::string graph = tmp.file("c4.graph", kFourCycle);

  RunConfig cfg;
  cfg.command = "crosscheck";
  cfg.inputs = {graph};
  RunResult ok = run(cfg);
  CHECK(ok.code == kExitOk);
  CHECK(nlohmann::json::parse(ok.out)["mismatch_count"] == 0);

  // corrupt the expected Graver set
  std::string expected = tmp.file("expected.json",
                                  R"({"graver":[{"plus":[1,1,0,0],"minus":[0,0,1,1]}],)"
                                  R"("circuits":[{"plus":[1,0,1,0],"minus":[0,1,0,1]}]})");
  cfg.expected_path = expected;
  RunResult bug = run(cfg);
  CHECK(bug.code == kExitViolation);
  auto doc = nlohmann::json::parse(bug.out);
  CHECK(doc["mismatch_count"] == 1);
  CHECK(doc["mismatches"][0]["graver_match"] == false);
  CHECK(doc["mismatches"][0]["circuits_match"] == true);
}

TEST_CASE("seeded corpus runs are byte-identical") {
  RunConfig cfg;
  cfg.command = "crosscheck";
  cfg.corpus_size = 25;
  cfg.seed = 99;
  RunResult a = run(cfg);
  RunResult b = run(cfg);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);

  RunConfig v;
  v.command = "verify";
  v.corpus_size = 10;
  v.seed = 5;
  RunResult va = run(v);
  RunResult vb = run(v);
  CHECK(va.code == kExitOk);
  CHECK(va.out == vb.out);
}

TEST_CASE("a directory input aggregates its .graph files in name order") {
  TempDir tmp;
  fs::create_directories(tmp.dir / "corpus");
  std::ofstream(tmp.dir / "corpus" / "a.graph") << kFourCycle;
  std::ofstream(tmp.dir / "corpus" / "b.graph") << "3\n0 1\n1 2\n";
  std::ofstream(tmp.dir / "corpus" / "notes.txt") << "ignored";

  RunConfig cfg;
  cfg.command = "verify";
  cfg.inputs = {(tmp.dir / "corpus").string()};
  RunResult r = run(cfg);
  CHECK(r.code == kExitOk);
  auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.contains("results"));
  CHECK(doc["results"].size() == 2);
  CHECK(doc["all_hold"] == true);
  CHECK(doc["results"][0]["input"].get<std::string>().ends_with("a.graph"));

  RunConfig empty_dir;
  empty_dir.command = "verify";
  fs::create_directories(tmp.dir / "empty");
  empty_dir.inputs = {(tmp.dir / "empty").string()};
  CHECK(run(empty_dir).code == kExitInputError);
}

TEST_CASE("output lands in --out when given") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = "circuits";
  cfg.inputs = {tmp.file("c4.graph", kFourCycle)};
  cfg.out_path = (tmp.dir / "report.json").string();
  RunResult r = run(cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(cfg.out_path);
  REQUIRE(in.good());
  nlohmann::json doc;
  in >> doc;
  CHECK(doc["count"] == 1);
}

#ifdef TORICGRAPH_CLI_PATH
TEST_CASE("the installed binary wires exit codes through") {
  TempDir tmp;
  std::string graph = tmp.file("c4.graph", kFourCycle);
  std::string bad = tmp.file("bad.graph", "2\n0 9\n");
  std::string null = " > /dev/null 2>&1";

  auto shell = [&](const std::string& args) {
    int status = std::system((std::string(TORICGRAPH_CLI_PATH) + " " + args + null).c_str());
    return WEXITSTATUS(status);
  };
  CHECK(shell("graver -i " + graph) == 0);
  CHECK(shell("circuits -i " + bad) == 2);
  CHECK(shell("graver -i " + graph + " --max-cycles 0") == 3);
  CHECK(shell("definitely-not-a-command") == 2);
}
#endif
