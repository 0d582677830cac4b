// End-to-end tests of the cascade-kit binary: exit codes, determinism,
// and output hygiene. The binary path is injected at compile time.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

RunResult run(const std::string& args) {
  const std::string out_path = "cli_test_stdout.tmp";
  const std::string err_path = "cli_test_stderr.tmp";
  const std::string cmd =
      std::string(CLI_BIN) + " " + args + " > " + out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
#ifdef _WIN32
  r.exit_code = status;
#else
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("verify is deterministic and byte-identical across reruns") {
  const RunResult a = run("verify A3 --checks all --seed 7");
  const RunResult b = run("verify A3 --checks all --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out.size() > 100);
  CHECK(a.out == b.out);
}

TEST_CASE("verify exit codes: 0 on pass, 1 on failure, 2 on malformed spec") {
  CHECK(run("verify B2 --checks section1").exit_code == 0);
  CHECK(run("verify A2 --seed 3 --inject-failure").exit_code == 1);

  const RunResult bad = run("verify H3");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.empty());  // no partial report
  CHECK(!bad.err.empty());

  const RunResult none = run("verify");
  CHECK(none.exit_code == 2);
  CHECK(none.out.empty());
}

TEST_CASE("malformed specs never leave partial output") {
  for (const char* spec : {"Z9", "A0", "B1", "E9", "A2x", "xA2", "A2xZ3"}) {
    const RunResult r = run(std::string("cascade ") + spec);
    CAPTURE(spec);
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
  }
}

TEST_CASE("cascade reports the product cascade") {
  const RunResult r = run("cascade B2xA1 --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("m = 3") != std::string::npos);
  CHECK(r.out.find("(1,2,0)") != std::string::npos);

  const RunResult j = run("cascade A3");
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("\"schema_version\": 1") != std::string::npos);
  CHECK(j.out.find("\"m\": 2") != std::string::npos);
}

TEST_CASE("table emits one tsv row per type") {
  const RunResult r = run("table --types A1,A2,A3,B2,B3,G2 --format tsv");
  CHECK(r.exit_code == 0);
  int rows = 0;
  std::istringstream in(r.out);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      CHECK(line.substr(0, 4) == "type");
      continue;
    }
    ++rows;
  }
  CHECK(rows == 6);
  CHECK(r.out.find("A2\t1\t(1,1)") != std::string::npos);
  CHECK(r.out.find("B3\t3\t") != std::string::npos);
}

TEST_CASE("reports embed seed and caps") {
  const RunResult r = run("verify A2 --checks invariants --seed 99 --r-cap 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"seed\": 99") != std::string::npos);
  CHECK(r.out.find("\"r_cap\": 3") != std::string::npos);
  CHECK(r.out.find("\"artifact_version\": \"1.0.0\"") != std::string::npos);
}

TEST_CASE("--out writes the same bytes as stdout") {
  const std::string path = "cli_test_report.tmp";
  const RunResult direct = run("verify A2 --checks section1 --seed 5");
  const RunResult filed = run("verify A2 --checks section1 --seed 5 --out " + path);
  CHECK(direct.exit_code == 0);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}
