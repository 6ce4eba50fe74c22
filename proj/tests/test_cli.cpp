#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#ifndef _WIN32
#include <sys/wait.h>
#endif
#include <fstream>
#include <sstream>
#include <string>

#include "kakeya/bounds.hpp"
#include "kakeya/kakeya.hpp"

using namespace kakeya;

namespace {

const std::string cli = KAKEYA_CLI_PATH;

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string out_file = "cli_stdout.tmp";
  int status = std::system((cli + " " + args + " > " + out_file + " 2>&1").c_str());
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::remove(out_file.c_str());
#ifdef _WIN32
  int code = status;
#else
  int code = WEXITSTATUS(status);
#endif
  return {code, buf.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("construct then verify full set") {
  auto c = run_cli("construct --q 3 --n 2 --kind full -o cli_full.set");
  REQUIRE(c.code == 0);
  auto v = run_cli("verify --kakeya --in cli_full.set");
  CHECK(v.code == 0);

  // CLI output matches the library for the same input
  auto loaded = load_set_file("cli_full.set");
  CHECK(*loaded.set == PointSet::full(*loaded.field, 2));
  std::remove("cli_full.set");
}

TEST_CASE("verify fails with the failing direction on a singleton") {
  std::ofstream("cli_single.set") << "q=3 n=2\n0,0\n";
  auto v = run_cli("verify --kakeya --in cli_single.set");
  CHECK(v.code == 1);
  CHECK(v.out.find("direction") != std::string::npos);
  std::remove("cli_single.set");
}

TEST_CASE("malformed file gives exit 2 with a line number") {
  std::ofstream("cli_bad.set") << "q=3 n=2\n1,2,3\n";
  auto v = run_cli("verify --kakeya --in cli_bad.set");
  CHECK(v.code == 2);
  CHECK(v.out.find("line 2") != std::string::npos);
  std::remove("cli_bad.set");
}

TEST_CASE("delta-gamma verification matches the library") {
  Field f3(3);
  PointSet line = PointSet::from_points(f3, 2, {{0, 0}, {1, 0}, {2, 0}});
  std::ofstream("cli_line.set") << line.serialize();
  // only the (1,0) class reaches 3 hits: |L| = 2 >= 2/9 * 9
  auto yes = run_cli("verify --delta 2/9 --gamma 1 --in cli_line.set");
  CHECK(yes.code == (check_delta_gamma(line, Ratio(2, 9), Ratio(1, 1)).ok ? 0 : 1));
  auto no = run_cli("verify --delta 0.5 --gamma 0.5 --in cli_line.set");
  CHECK(no.code == (check_delta_gamma(line, Ratio(1, 2), Ratio(1, 2)).ok ? 0 : 1));
  std::remove("cli_line.set");
}

TEST_CASE("bound subcommand prints the paper values") {
  auto b = run_cli("bound --q 3 --n 2");
  CHECK(b.code == 0);
  CHECK(b.out.find("alon_tao: 3") != std::string::npos);

  auto t = run_cli("bound --q 5 --n 2 --delta 1 --gamma 1");
  CHECK(t.out.find("thm2: 4") != std::string::npos);

  auto v = run_cli("bound --q 2 --n 2 --delta 0.5 --gamma 0.5");
  CHECK(v.out.find("thm2: 0") != std::string::npos);
}

TEST_CASE("zeros subcommand") {
  auto z = run_cli("zeros --poly 1*x1^1 --q 3 --n 2");
  CHECK(z.code == 0);
  CHECK(z.out == "3\n");
}

TEST_CASE("certify cascade and round-trip through verify-certificate") {
  REQUIRE(run_cli("construct --q 3 --n 2 --kind greedy -o cli_g.set").code == 0);
  auto c = run_cli("certify --cascade --in cli_g.set -o cli_g.cert.json");
  REQUIRE(c.code == 0);
  CHECK(c.out.find("consistency") != std::string::npos);
  auto v = run_cli("verify-certificate --in cli_g.cert.json");
  CHECK(v.code == 0);
  std::remove("cli_g.set");
  std::remove("cli_g.cert.json");
}

TEST_CASE("search exact on GF(2)^2") {
  auto s = run_cli("--format json search --exact --q 2 --n 2");
  CHECK(s.code == 0);
  CHECK(s.out.find("\"min_size\": 3") != std::string::npos);
  CHECK(s.out.find("\"optimal\": \"exact\"") != std::string::npos);
}

TEST_CASE("seeded runs are byte-identical, thread count does not matter") {
  REQUIRE(run_cli("--seed 9 construct --q 3 --n 2 --kind random -o cli_r1.set").code == 0);
  REQUIRE(run_cli("--seed 9 --threads 4 construct --q 3 --n 2 --kind random -o cli_r2.set").code == 0);
  CHECK(read_file("cli_r1.set") == read_file("cli_r2.set"));

  REQUIRE(run_cli("certify --cascade --in cli_r1.set -o cli_c1.json").code == 0);
  REQUIRE(run_cli("--threads 4 certify --cascade --in cli_r1.set -o cli_c2.json").code == 0);
  CHECK(read_file("cli_c1.json") == read_file("cli_c2.json"));
  std::remove("cli_r1.set");
  std::remove("cli_r2.set");
  std::remove("cli_c1.json");
  std::remove("cli_c2.json");
}

TEST_CASE("dump-config echoes the parsed configuration") {
  auto d = run_cli("--seed 5 --threads 2 --dump-config bound --q 3 --n 2");
  CHECK(d.code == 0);
  CHECK(d.out.find("\"seed\": 5") != std::string::npos);
  CHECK(d.out.find("\"threads\": 2") != std::string::npos);
}

TEST_CASE("env var overrides resource limits") {
  auto z = run_cli("zeros --poly 1*x1^1 --q 7 --n 3");
  CHECK(z.code == 0);
  setenv("KAKEYA_MAX_POINTS", "10", 1);
  auto capped = run_cli("zeros --poly 1*x1^1 --q 7 --n 3");
  unsetenv("KAKEYA_MAX_POINTS");
  CHECK(capped.code == 3);
}
