// End-to-end CLI tests: exit-code contract, golden reports, and
// byte-stability of repeated runs. Requires the cli binary path and the
// golden directory via compile definitions; runs with tests/ as cwd.

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(BLOCKNORM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void check_golden(const std::string& args, const std::string& golden_name, int expected_exit) {
  CAPTURE(args);
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.exit_code == expected_exit);
  CHECK(first.out == second.out);  // byte-identical across runs
  const std::string expected = read_file(std::string(BLOCKNORM_GOLDEN_DIR) + "/" + golden_name);
  CHECK(first.out == expected);
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("golden: check on the stock counterexample") {
  check_golden("check --input golden/inputs/T.json", "check_T.json", 1);
}

TEST_CASE("golden: norms with the full profile") {
  check_golden("norms --input golden/inputs/T.json --kyfan", "norms_T.json", 0);
}

TEST_CASE("golden: decompose, both modes") {
  check_golden("decompose --input golden/inputs/T.json --mode im", "decompose_T_im.json", 0);
  check_golden("decompose --input golden/inputs/T.json --mode re", "decompose_T_re.json", 0);
}

TEST_CASE("golden: facts") {
  check_golden("facts --input golden/inputs/T.json", "facts_T.json", 0);
}

TEST_CASE("golden: bound2") {
  check_golden("bound2 --input golden/inputs/T.json", "bound2_T.json", 0);
}

TEST_CASE("golden: reduce, absent and present certificates") {
  check_golden("reduce --input golden/inputs/T.json", "reduce_T.json", 1);
  check_golden("reduce --input golden/inputs/commuting.json", "reduce_commuting.json", 0);
}

TEST_CASE("golden: examples") {
  check_golden("examples --name T --check", "examples_T.json", 1);
  check_golden("examples --name Ny --y 0.5 --check", "examples_Ny.json", 1);
}

TEST_CASE("golden: gen-family with verification") {
  check_golden("gen-family --a 1,2 --b -0.5,-1 --d 1,2 --verify", "genfamily.json", 0);
}

TEST_CASE("golden: search is reproducible per seed") {
  check_golden("search --dim 2 --trials 200 --seed 42", "search.json", 0);
}

TEST_CASE("golden: det-shortcut") {
  check_golden("det-shortcut --input golden/inputs/detcase.json", "detshortcut.json", 0);
}

TEST_CASE("text format smoke test") {
  const RunResult r = run_cli("check --input golden/inputs/T.json --format text");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("verdict:         violated") != std::string::npos);
  CHECK(r.out.find("hypothesis:      None") != std::string::npos);

  const RunResult family = run_cli("gen-family --a 1 --b -1 --d 2 --format text");
  CHECK(family.exit_code == 0);
  CHECK(family.out.find("verdict:    generated") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run_cli("check").exit_code == 2);                                // missing --input
  CHECK(run_cli("check --input no/such/file.json").exit_code == 2);     // unreadable
  CHECK(run_cli("frobnicate").exit_code == 2);                          // unknown subcommand
  CHECK(run_cli("examples --name Q").exit_code == 2);                   // out of menu
  CHECK(run_cli("gen-family --a 1 --b 1 --d 1").exit_code == 2);        // sign violation
  CHECK(run_cli("gen-family --a 1 --b -2 --d 1 --verify").exit_code == 2);  // flags fail
  CHECK(run_cli("det-shortcut --input golden/inputs/T.json").exit_code == 2);  // no commutation
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_SUITE_END();
