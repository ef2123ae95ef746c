#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "chdig/families.hpp"
#include "chdig/io.hpp"

using namespace chdig;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CHDIG_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) out += buffer.data();
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string temp_digraph_file(const Digraph& d, const std::string& name) {
  std::string path = "/tmp/chdig_test_" + name + ".json";
  write_digraph_file(d, path);
  return path;
}

}  // namespace

TEST_CASE("gen emits interchange digraphs") {
  RunResult r = run_cli("gen cycle 5 --compose-empty 1");
  CHECK(r.exit_code == 0);
  CHECK(from_interchange(r.out) == families::directed_cycle(5));

  RunResult y = run_cli("gen y 3");
  CHECK(from_interchange(y.out) == families::y(3));

  RunResult composed = run_cli("gen cycle 3 --compose-empty 2");
  CHECK(from_interchange(composed.out) ==
        lex_product(families::directed_cycle(3), families::empty(2)));

  RunResult dot = run_cli("gen cycle 3 --dot");
  CHECK(dot.out == to_dot(families::directed_cycle(3)));

  CHECK(run_cli("gen cycle 2").exit_code == 2);
  CHECK(run_cli("gen nosuch 3").exit_code == 2);
}

TEST_CASE("gen output is byte-stable across invocations") {
  RunResult a = run_cli("gen y 4");
  RunResult b = run_cli("gen y 4");
  CHECK(a.out == b.out);
}

TEST_CASE("check exit codes") {
  std::string c5 = temp_digraph_file(families::directed_cycle(5), "c5");
  CHECK(run_cli("check " + c5 + " --mode c-homogeneous").exit_code == 0);

  RunResult hom = run_cli("check " + c5 + " --mode homogeneous");
  CHECK(hom.exit_code == 1);
  CHECK(hom.out.find("witness") != std::string::npos);

  std::string cp4 = temp_digraph_file(families::cp(4), "cp4");
  CHECK(run_cli("check " + cp4 + " --mode c-bipartite").exit_code == 0);

  std::string c3 = temp_digraph_file(families::directed_cycle(3), "c3");
  CHECK(run_cli("check " + c3 + " --mode c-bipartite").exit_code == 2);

  CHECK(run_cli("check /nonexistent.json --mode homogeneous").exit_code == 2);
  CHECK(run_cli("check " + c5 + " --mode bogus").exit_code == 2);
}

TEST_CASE("reach prints class structure") {
  std::string y3 = temp_digraph_file(families::y(3), "y3");
  RunResult r = run_cli("reach " + y3);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("classes: 3") != std::string::npos);
  CHECK(r.out.find("MatchingComplement(3)") != std::string::npos);
}

TEST_CASE("quotient verifies specs") {
  RunResult torus = run_cli("quotient --k 9 --a 3,4,5,6,7,8,0,1,2 --b 1,2,0,4,5,3,7,8,6");
  CHECK(torus.exit_code == 0);
  CHECK(torus.out.find("\"verified\": true") != std::string::npos);

  RunResult invalid = run_cli("quotient --k 4 --a 1,2,0,3 --b 1,2,0,3");
  CHECK(invalid.exit_code == 2);
}

TEST_CASE("quotient-search and classify") {
  RunResult search = run_cli("quotient-search --max-k 3");
  CHECK(search.exit_code == 0);
  CHECK(search.out.find("\"k\": 3") != std::string::npos);

  std::string y4 = temp_digraph_file(families::y(4), "y4");
  RunResult classify = run_cli("classify " + y4);
  CHECK(classify.exit_code == 0);
  CHECK(classify.out == "Y(4)\n");
}

TEST_CASE("census command") {
  RunResult r = run_cli("census --max-n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Cycle(3,1)") != std::string::npos);
  CHECK(r.out.find("Cycle(4,1)") != std::string::npos);
  CHECK(r.out.find("UNEXPLAINED") == std::string::npos);

  // n=7 refused without the confirmation flag
  CHECK(run_cli("census --max-n 7").exit_code == 2);
}

TEST_CASE("emitted digraph files re-parse to equal digraphs") {
  RunResult r = run_cli("gen t2-ball 2 --out /tmp/chdig_test_ball.json");
  CHECK(r.exit_code == 0);
  Digraph ball = read_digraph_file("/tmp/chdig_test_ball.json");
  CHECK(ball == families::t2_ball(2).digraph);
}
