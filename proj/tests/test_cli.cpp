// End-to-end tests driving the hopfcheck binary through a shell: flag
// surface, report contents, exit codes, and byte-stable output.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "hopfcheck/report.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + HOPFCHECK_BIN + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json parse_report(const RunResult& r) {
  // Every JSON report the tool prints must load back through the library.
  CHECK_NOTHROW(hopfcheck::report::from_json(r.out));
  return json::parse(r.out);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> case_ids(const json& report) {
  std::vector<std::string> ids;
  for (const auto& c : report.at("cases")) ids.push_back(c.at("id").get<std::string>());
  return ids;
}

}  // namespace

TEST_CASE("enumerate pins the degree-p count and lists the one solution") {
  const auto r = run_cli("enumerate --p 2 --q 5 --g 2 --pin a=0 --no-timings 2>/dev/null");
  CHECK(r.exit_code == 0);
  const auto j = parse_report(r);
  CHECK(j.at("config").at("command") == "enumerate");
  CHECK(j.at("config").at("params").at("pins") == "2=0");
  REQUIRE(j.at("cases").size() == 1);
  CHECK(j.at("cases")[0].at("id") == "(1,2;4,3;5,2)");
  CHECK(j.at("cases")[0].at("screen").at("passed") == true);
  CHECK(j.at("findings").empty());
}

TEST_CASE("enumerate at the whole dimension yields the all-grouplike solution") {
  const auto r = run_cli("enumerate --p 2 --q 5 --g 100 --no-timings 2>/dev/null");
  CHECK(r.exit_code == 0);
  const auto j = parse_report(r);
  REQUIRE(j.at("cases").size() == 1);
  CHECK(j.at("cases")[0].at("id") == "(1,100)");
}

TEST_CASE("enumerate --p 2 --q 7 --g 14 with a pinned to zero is empty") {
  const auto r = run_cli("enumerate --p 2 --q 7 --g 14 --pin a=0 --no-timings 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(parse_report(r).at("cases").empty());
}

TEST_CASE("enumerate rejects bad input with exit 2 and no report") {
  CHECK(run_cli("enumerate --p 2 --q 5 --g 3 2>/dev/null").exit_code == 2);
  CHECK(run_cli("enumerate --p 2 --q 5 --g 3 2>/dev/null").out.empty());
  CHECK(run_cli("enumerate --p 2 --q 5 --g 2 --pin z=1 2>/dev/null").exit_code == 2);
  CHECK(run_cli("enumerate --p 2 --q 5 --g 2 --pin a=0 --pin a=1 2>/dev/null").exit_code == 2);
  CHECK(run_cli("enumerate --p 4 --q 5 --g 2 2>/dev/null").exit_code == 2);
  CHECK(run_cli("enumerate --q 5 --g 2 2>/dev/null").exit_code == 2);
}

TEST_CASE("eliminate refutes the a=0 candidate at q=5") {
  const auto r = run_cli("eliminate --type '(1,2;4,3;5,2)' --dim 100 --no-timings 2>/dev/null");
  CHECK(r.exit_code == 0);
  const auto j = parse_report(r);
  REQUIRE(j.at("cases").size() == 1);
  const auto& f = j.at("cases")[0].at("fusion");
  CHECK(f.at("group") == "C2");
  CHECK(f.at("outcome") == "infeasible");
  CHECK(f.at("stats").at("nodes") == 28);
  CHECK(!f.contains("witness"));
}

TEST_CASE("eliminate finds witnesses for a feasible eight-dimensional type") {
  const auto r = run_cli("eliminate --type '(1,4;2,1)' --dim 8 --no-timings 2>/dev/null");
  CHECK(r.exit_code == 0);
  const auto j = parse_report(r);
  REQUIRE(j.at("cases").size() == 2);
  CHECK(case_ids(j) ==
        std::vector<std::string>{"(1,4;2,1) over C4", "(1,4;2,1) over C2xC2"});
  for (const auto& c : j.at("cases")) {
    CHECK(c.at("fusion").at("outcome") == "feasible");
    REQUIRE(c.at("fusion").contains("witness"));
    const auto w = c.at("fusion").at("witness").get<std::string>();
    CHECK(w.find("e4*e4 = e0 + e1 + e2 + e3") != std::string::npos);
  }
}

TEST_CASE("eliminate refutes the q=13 candidate before branching") {
  const auto r = run_cli("eliminate --type '(1,2;4,21;13,2)' --dim 676 --no-timings 2>/dev/null");
  CHECK(r.exit_code == 0);
  const auto j = parse_report(r);
  REQUIRE(j.at("cases").size() == 1);
  CHECK(j.at("cases")[0].at("fusion").at("outcome") == "infeasible");
  CHECK(j.at("cases")[0].at("fusion").at("stats").at("nodes") == 0);
}

TEST_CASE("eliminate group selection restricts the classes searched") {
  const auto one = run_cli("eliminate --type '(1,4;2,1)' --group C4 --no-timings 2>/dev/null");
  CHECK(one.exit_code == 0);
  CHECK(case_ids(parse_report(one)) == std::vector<std::string>{"(1,4;2,1) over C4"});
  CHECK(run_cli("eliminate --type '(1,4;2,1)' --group C8 2>/dev/null").exit_code == 2);
}

TEST_CASE("eliminate rejects malformed types and mismatched dimensions") {
  CHECK(run_cli("eliminate --type '(1,2;4,3;5,2' --dim 100 2>/dev/null").exit_code == 2);
  CHECK(run_cli("eliminate --type '(1,2;4,3;5,2)' --dim 99 2>/dev/null").exit_code == 2);
}

TEST_CASE("eliminate surfaces budget exhaustion as exit 3") {
  const auto r = run_cli("eliminate --type '(1,2;4,3;5,2)' --budget 10 --no-timings 2>/dev/null");
  CHECK(r.exit_code == 3);
  const auto j = parse_report(r);
  CHECK(j.at("cases")[0].at("fusion").at("outcome") == "budget-exceeded");
  REQUIRE(j.at("findings").size() == 1);
  CHECK(j.at("findings")[0].at("kind") == "budget-exhausted");
}

TEST_CASE("classify --p 2 --q 11 reports all nine grouplike-order cases") {
  const auto r = run_cli("classify --p 2 --q 11 --no-timings 2>/dev/null");
  CHECK(r.exit_code == 0);
  const auto j = parse_report(r);
  CHECK(case_ids(j) == std::vector<std::string>{"g=1", "g=2", "g=4", "g=11", "g=22",
                                                "g=44", "g=121", "g=242", "g=484"});
  const std::vector<std::string> outcomes = {
      "impossible",          "upper-semisolvable", "semisolvable-or-biproduct",
      "impossible",          "upper-semisolvable", "semisolvable-or-biproduct",
      "upper-semisolvable",  "upper-semisolvable", "dual-group-algebra"};
  for (size_t i = 0; i < outcomes.size(); ++i)
    CHECK(j.at("cases")[i].at("verdict").at("outcome") == outcomes[i]);
  CHECK(j.at("findings").empty());
}

TEST_CASE("classify respects the hypothesis boundary at p=3") {
  CHECK(run_cli("classify --p 3 --q 83 --no-timings 2>/dev/null").exit_code == 0);
  const auto bad = run_cli("classify --p 3 --q 79 2>/dev/null");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.empty());
}

TEST_CASE("classify --p 2 --q 3 emits the single whole-dimension verdict") {
  const auto r = run_cli("classify --p 2 --q 3 --no-timings 2>/dev/null");
  CHECK(r.exit_code == 0);
  const auto j = parse_report(r);
  REQUIRE(j.at("cases").size() == 1);
  CHECK(j.at("cases")[0].at("id") == "whole-dimension");
  CHECK(j.at("cases")[0].at("verdict").at("outcome") == "semisolvable-or-biproduct");
}

TEST_CASE("markdown and JSON reports carry the same verdicts") {
  const auto jr = run_cli("classify --p 2 --q 13 --no-timings 2>/dev/null");
  const auto mr = run_cli("classify --p 2 --q 13 --format markdown --no-timings 2>/dev/null");
  CHECK(jr.exit_code == 0);
  CHECK(mr.exit_code == 0);
  const auto j = parse_report(jr);
  for (const auto& c : j.at("cases")) {
    const std::string row = "| " + c.at("id").get<std::string>() + " | verdict | " +
                            c.at("verdict").at("outcome").get<std::string>() + " |";
    CHECK(mr.out.find(row) != std::string::npos);
  }
}

TEST_CASE("relative --out paths resolve against HOPFCHECK_OUT_DIR") {
  const std::string dir = "/tmp/hopfcheck_cli_test";
  REQUIRE(std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) == 0);
  const auto r = run_cli("classify --p 2 --q 5 --out out.json --no-timings 2>/dev/null",
                         "HOPFCHECK_OUT_DIR=" + dir);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  const auto text = slurp(dir + "/out.json");
  CHECK_NOTHROW(hopfcheck::report::from_json(text));
  const auto direct = run_cli("classify --p 2 --q 5 --no-timings 2>/dev/null");
  CHECK(text == direct.out);
}

TEST_CASE("verify-paper passes cleanly and is byte-stable without timings") {
  const auto a = run_cli("verify-paper --no-timings 2>/dev/null");
  CHECK(a.exit_code == 0);
  const auto j = parse_report(a);
  CHECK(j.at("findings").empty());
  int criteria = 0;
  for (const auto& c : j.at("cases"))
    if (c.at("kind") == "criterion") {
      ++criteria;
      CHECK(c.at("criterion").at("passed") == true);
      CHECK(!c.contains("wall_ms"));
    }
  CHECK(criteria == 12);

  const auto b = run_cli("verify-paper --no-timings 2>/dev/null");
  CHECK(a.out == b.out);
}

TEST_CASE("verify-paper with a starved budget fails with the criterion named") {
  const std::string out_path = "/tmp/hopfcheck_cli_test_budget.json";
  const auto r =
      run_cli("verify-paper --budget 10 --no-timings --out " + out_path + " 2>&1");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("criterion 5 (fusion-refutations): FAIL") != std::string::npos);
  const auto j = json::parse(slurp(out_path));
  bool budget_finding = false;
  for (const auto& f : j.at("findings"))
    if (f.at("kind") == "budget-exhausted") budget_finding = true;
  CHECK(budget_finding);
}

TEST_CASE("usage errors and the version flag") {
  CHECK(run_cli("2>/dev/null").exit_code == 2);
  CHECK(run_cli("frobnicate 2>/dev/null").exit_code == 2);
  CHECK(run_cli("classify --p 2 --q 11 --format yaml 2>/dev/null").exit_code == 2);
  const auto v = run_cli("--version 2>/dev/null");
  CHECK(v.exit_code == 0);
  CHECK(v.out == "0.1.0\n");
}
