#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "twinless/edge_list.hpp"
#include "twinless/fixtures.hpp"

using namespace twinless;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through the shell, optionally piping `input` to stdin.
RunResult run_cli(const std::string& args, const std::string& input = "") {
  std::string cmd;
  if (!input.empty()) {
    std::string quoted = input;
    cmd = "printf '%s' \"" + quoted + "\" | ";
  }
  cmd += std::string(TWINLESS_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kTwoCycle = "2 2\n1 2\n2 1\n";

}  // namespace

TEST_CASE("check tsc on the 2-cycle reports false with exit 0") {
  RunResult r = run_cli("check tsc", kTwoCycle);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("result: false") != std::string::npos);
}

TEST_CASE("tap on fig1 prints the caption set") {
  RunResult r = run_cli("fixtures --name fig1 | " TWINLESS_CLI_PATH " tap");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("taps: 3 4 6 9 10") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
  RunResult a = run_cli("fixtures --name fig4a | " TWINLESS_CLI_PATH " mtscss --algo 2approx --trace");
  RunResult b = run_cli("fixtures --name fig4a | " TWINLESS_CLI_PATH " mtscss --algo 2approx --trace");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  RunResult j1 = run_cli("gen random-tsc 8 10 --seed 99");
  RunResult j2 = run_cli("gen random-tsc 8 10 --seed 99");
  CHECK(j1.out == j2.out);
}

TEST_CASE("gen output re-parses and satisfies its property") {
  RunResult gen = run_cli("gen random-sc 12 30 --seed 7");
  REQUIRE(gen.exit_code == 0);
  ParsedEdgeList doc = parse_edge_list(gen.out);
  CHECK(doc.n == 12);
  CHECK(static_cast<int>(doc.edges.size()) == 30);
  RunResult check = run_cli("gen random-sc 12 30 --seed 7 | " TWINLESS_CLI_PATH " check sc");
  CHECK(check.out.find("result: true") != std::string::npos);
  RunResult tsc = run_cli("gen random-tsc 12 18 --seed 7 | " TWINLESS_CLI_PATH " check tsc");
  CHECK(tsc.out.find("result: true") != std::string::npos);
}

TEST_CASE("exit codes: 2 for input errors, 3 for precondition errors") {
  CHECK(run_cli("check sc", "garbage\n").exit_code == 2);
  CHECK(run_cli("tap", kTwoCycle).exit_code == 3);
  CHECK(run_cli("sap", "2 1\n1 2\n").exit_code == 3);
  CHECK(run_cli("tbridge --sparse", kTwoCycle).exit_code == 3);
  CHECK(run_cli("--no-such-flag").exit_code == 2);
  CHECK(run_cli("check nonsense", kTwoCycle).exit_code == 2);
}

TEST_CASE("tbridge flags degraded non-TSC input but still exits 0") {
  RunResult r = run_cli("tbridge", kTwoCycle);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("degraded_non_tsc_input: true") != std::string::npos);
  CHECK(r.out.find("tbridges: (1,2) (2,1)") != std::string::npos);
}

TEST_CASE("--input reads from a file") {
  RunResult r = run_cli("sap --input " + std::string(TWINLESS_DATA_DIR) + "/fig1.edges");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("saps: 6 9") != std::string::npos);
  CHECK(run_cli("sap --input /no/such/file").exit_code == 2);
}

TEST_CASE("scc and check 2etc work through the CLI") {
  RunResult scc = run_cli("scc", "4 3\n1 2\n2 1\n3 4\n");
  CHECK(scc.exit_code == 0);
  CHECK(scc.out.find("count: 3") != std::string::npos);
  RunResult etc2 = run_cli("fixtures --name fig2 | " TWINLESS_CLI_PATH " check 2etc");
  CHECK(etc2.out.find("result: true") != std::string::npos);
}

TEST_CASE("2vcc-oracle subcommand") {
  RunResult r = run_cli("fixtures --name fig1 | " TWINLESS_CLI_PATH " 2vcc-oracle --max-n 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1: 1 2 3 4 5 6 8 9 10") != std::string::npos);
  // default budget rejects n=10
  CHECK(run_cli("fixtures --name fig1 | " TWINLESS_CLI_PATH " 2vcc-oracle").exit_code == 3);
}

TEST_CASE("json output is valid and deterministic") {
  RunResult a = run_cli("fixtures --name fig1 | " TWINLESS_CLI_PATH " 2vtcc --format json");
  RunResult b = run_cli("fixtures --name fig1 | " TWINLESS_CLI_PATH " 2vtcc --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"components\": [") != std::string::npos);
}

TEST_CASE("timing field only appears on request") {
  RunResult plain = run_cli("check sc", kTwoCycle);
  CHECK(plain.out.find("wall_ms") == std::string::npos);
  RunResult timed = run_cli("check sc --timing", kTwoCycle);
  CHECK(timed.out.find("wall_ms") != std::string::npos);
}

TEST_CASE("bench runs a suite file and prints a table") {
  std::string suite_path = std::string(TWINLESS_DATA_DIR) + "/bench.suite";
  RunResult r = run_cli("bench --suite " + suite_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("case n m op result ms") == 0);
  CHECK(r.out.find("tiny ") != std::string::npos);
  CHECK(r.out.find(" tap ") != std::string::npos);
  CHECK(run_cli("bench --suite /nonexistent.suite").exit_code == 2);
}

TEST_CASE("fixtures subcommand lists names and emits documents") {
  RunResult names = run_cli("fixtures");
  for (const Fixture& f : all_fixtures())
    CHECK(names.out.find(f.name + "\n") != std::string::npos);
  RunResult fig2 = run_cli("fixtures --name fig2");
  CHECK(fig2.out == serialize_edge_list(fixture_graph("fig2")));
  CHECK(run_cli("fixtures --name nope").exit_code == 2);
}
