#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "tic/construct.hpp"
#include "tic/json_io.hpp"

using namespace tic;
using nlohmann::json;

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(TIC_CLI_PATH) + " " + args + " 2>/dev/null";
  CmdResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int rc = pclose(pipe);
  res.status = WEXITSTATUS(rc);
  return res;
}

}  // namespace

TEST_CASE("solve output round-trips and matches the solver") {
  CmdResult r = run_cli("solve --n 6 --k 3 --m 4 --all-optima");
  REQUIRE(r.status == 0);
  SolveResult res = solve_result_from_json(json::parse(r.out));
  CHECK(res.mi_value == 36);
  CHECK(total_intersection(res.witness) == 36);
  REQUIRE(res.optima.has_value());
  CHECK(res.optima->size() >= 2);
}

TEST_CASE("construct emits the family interchange format") {
  CmdResult r = run_cli("construct lex --n 4 --k 2 --m 3");
  REQUIRE(r.status == 0);
  SetFamily f = family_from_json(json::parse(r.out));
  CHECK(f == lex_segment(4, 2, 3));
}

TEST_CASE("hypothesis report example") {
  CmdResult r = run_cli("bounds hypotheses --n 10 --k 3 --t 1 --r 1 --delta 1/2");
  REQUIRE(r.status == 0);
  HypothesisReport h = hypothesis_report_from_json(json::parse(r.out));
  CHECK(!h.met);
  CHECK(h.required_n == 864000);
}

TEST_CASE("bound report round-trips with the flagged discrepancy") {
  CmdResult r = run_cli("bounds t1 --n 10 --k 3 --r 1 --delta 1");
  REQUIRE(r.status == 0);
  BoundReport rep = bound_report_from_json(json::parse(r.out));
  CHECK(rep.bound_value == 3104);
  REQUIRE(rep.reference_value.has_value());
  CHECK(*rep.reference_value == 4392);
  CHECK(rep.bound_holds == false);
  REQUIRE(rep.folded_value.has_value());
  CHECK(*rep.folded_value == 4392);
}

TEST_CASE("distance output round-trips") {
  CmdResult r = run_cli("solve-distance --n 6 --k 2 --m 10");
  REQUIRE(r.status == 0);
  MinDistanceResult res = min_distance_from_json(json::parse(r.out));
  CHECK(res.total == 240);
  CHECK(res.solve.mi_value == 80);
  CHECK(from_code(res.witness).size() == 10);
}

TEST_CASE("invalid parameters exit with code 2") {
  CHECK(run_cli("solve --n 4 --k 9 --m 2").status == 2);
  CHECK(run_cli("solve --n 4 --k 2").status == 2);           // missing --m
  CHECK(run_cli("bounds t1 --n 10 --k 3 --r 1 --delta x").status == 2);
  CHECK(run_cli("nonsense").status == 2);
}

TEST_CASE("resource guard exits with code 3") {
  CHECK(run_cli("solve --n 8 --k 4 --m 20 --node-limit 10").status == 3);
  CHECK(run_cli("construct lex --n 40 --k 20 --m 100000000000").status == 3);
}

TEST_CASE("reruns are byte-identical") {
  std::string cmd = "solve --n 6 --k 3 --m 4 --all-optima --threads 4";
  CmdResult a = run_cli(cmd);
  CmdResult b = run_cli(cmd);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("verify sandwich verdicts are three-valued") {
  save_family("/tmp/tic_cli_star.json", full_t_star(5, 2, {1}));
  save_family("/tmp/tic_cli_pair.json",
              make_family(4, 2, {make_ksubset(4, {1, 2}), make_ksubset(4, {3, 4})}));
  save_family("/tmp/tic_cli_mid.json", lex_segment(6, 3, 17));

  CmdResult r = run_cli("verify sandwich --family /tmp/tic_cli_star.json --t 1 --r 1");
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out).at("verdict") == "holds");

  r = run_cli("verify sandwich --family /tmp/tic_cli_pair.json --t 1 --r 0");
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out).at("verdict") == "fails");

  r = run_cli("verify sandwich --family /tmp/tic_cli_mid.json --t 1 --r 1");
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out).at("verdict") == "not-applicable");
}

TEST_CASE("grid runner validates everything before running") {
  {
    std::ofstream cfg("/tmp/tic_cli_grid.json");
    cfg << R"({"command": "solve", "n": [4], "k": [2, 9], "m": ["3"],)"
        << R"( "csv": "/tmp/tic_cli_grid.csv"})" << "\n";
  }
  std::remove("/tmp/tic_cli_grid.csv");
  CmdResult r = run_cli("run --config /tmp/tic_cli_grid.json");
  CHECK(r.status == 2);
  std::ifstream check("/tmp/tic_cli_grid.csv");
  CHECK(!check.good());  // nothing ran, nothing written
}

TEST_CASE("grid runner emits the documented CSV schema") {
  {
    std::ofstream cfg("/tmp/tic_cli_grid2.json");
    cfg << R"({"command": "bound-t1", "n": [10], "k": [3], "r": [1],)"
        << R"( "delta": ["0"], "csv": "/tmp/tic_cli_grid2.csv"})" << "\n";
  }
  CmdResult r = run_cli("run --config /tmp/tic_cli_grid2.json");
  REQUIRE(r.status == 0);
  std::ifstream csv("/tmp/tic_cli_grid2.csv");
  std::string header, row;
  REQUIRE(std::getline(csv, header));
  REQUIRE(std::getline(csv, row));
  CHECK(header == "n,k,t,r,delta_num,delta_den,M,value,reference,verdict");
  CHECK(row == "10,3,1,1,0,1,36,1872,1872,holds");
}
