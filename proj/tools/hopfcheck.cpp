// Command-line front end: enumerate type solutions, eliminate single types
// by character-ring search, classify every grouplike-order case, or run the
// full reproduction suite. Reports go to stdout (or --out) as JSON or
// Markdown; diagnostics go to stderr; exit codes are 0 (success),
// 1 (verification failure), 2 (usage or parse error), 3 (budget exhausted).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfcheck/arithmetic.hpp"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/fusion.hpp"
#include "hopfcheck/group.hpp"
#include "hopfcheck/report.hpp"
#include "hopfcheck/typeprofile.hpp"
#include "hopfcheck/verdict.hpp"
#include "hopfcheck/verify.hpp"

namespace {

using hopfcheck::arith::i64;
namespace fusion = hopfcheck::fusion;
namespace grp = hopfcheck::grp;
namespace profile = hopfcheck::profile;
namespace report = hopfcheck::report;
namespace verdict = hopfcheck::verdict;
namespace verify = hopfcheck::verify;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string num(i64 n) { return std::to_string(n); }

struct OutputOptions {
  std::string format = "json";
  std::string out_path;
  bool no_timings = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"json", "markdown"}))
      ->capture_default_str();
  cmd->add_option("--out", out.out_path,
                  "Write the report to this path instead of stdout; a relative "
                  "path resolves against $HOPFCHECK_OUT_DIR when that is set");
  cmd->add_flag("--no-timings", out.no_timings,
                "Omit wall-clock timings so identical runs emit identical bytes");
}

void echo_output_params(report::Report& r, const OutputOptions& out) {
  r.config.params["format"] = out.format;
  if (out.no_timings) r.config.params["no_timings"] = "true";
}

int emit(const report::Report& r, const OutputOptions& out) {
  const std::string text =
      out.format == "markdown" ? report::to_markdown(r) : report::to_json(r);
  if (out.out_path.empty()) {
    std::cout << text;
    return std::cout.good() ? 0 : 2;
  }
  std::filesystem::path path(out.out_path);
  if (path.is_relative())
    if (const char* dir = std::getenv("HOPFCHECK_OUT_DIR")) path = std::filesystem::path(dir) / path;
  std::ofstream file(path);
  if (!file) {
    std::cerr << "hopfcheck: cannot open '" << path.string() << "' for writing\n";
    return 2;
  }
  file << text;
  file.flush();
  if (!file.good()) {
    std::cerr << "hopfcheck: failed writing '" << path.string() << "'\n";
    return 2;
  }
  return 0;
}

/** "a=0" pins the count at degree p, "b" at p^2, "c" at q. */
void parse_pin(const std::string& arg, const profile::DimensionProfile& pf,
               std::map<i64, i64>& pins) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size())
    hopfcheck::fail("ParseError", "pin '" + arg + "' is not of the form a=N");
  const std::string key = arg.substr(0, eq);
  i64 degree = 0;
  if (key == "a")
    degree = pf.p;
  else if (key == "b")
    degree = pf.p * pf.p;
  else if (key == "c")
    degree = pf.q;
  else
    hopfcheck::fail("ParseError", "pin '" + arg + "' names '" + key +
                                      "', expected a (degree p), b (degree p^2) or c (degree q)");
  i64 count = 0;
  try {
    size_t used = 0;
    count = std::stoll(arg.substr(eq + 1), &used);
    if (used != arg.size() - eq - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    hopfcheck::fail("ParseError", "pin '" + arg + "' has a malformed count");
  }
  if (pins.count(degree))
    hopfcheck::fail("InconsistentPin", "pin '" + arg + "' repeats degree " + num(degree));
  pins[degree] = count;
}

int run_enumerate(i64 p, i64 q, i64 g, const std::vector<std::string>& pin_args,
                  const OutputOptions& out) {
  const auto start = Clock::now();
  const auto pf = profile::make_profile(p, q);
  if (g < 1 || pf.dim() % g != 0) {
    std::cerr << "hopfcheck: --g must be a positive divisor of " << pf.dim() << "\n";
    return 2;
  }
  std::map<i64, i64> pins;
  for (const auto& arg : pin_args) parse_pin(arg, pf, pins);

  report::Report r;
  r.config.command = "enumerate";
  r.config.params = {{"p", num(p)}, {"q", num(q)}, {"g", num(g)}};
  if (!pins.empty()) {
    std::string s;
    for (const auto& [d, n] : pins) s += (s.empty() ? "" : ",") + num(d) + "=" + num(n);
    r.config.params["pins"] = s;
  }
  echo_output_params(r, out);

  const auto sols = hopfcheck::arith::enumerate_dimension_solutions(
      pf.dim(), g, profile::frobenius_degree_set(pf), pins);
  for (const auto& sol : sols) {
    const auto case_start = Clock::now();
    auto c = report::screen_case(
        profile::screen_one(pf, profile::AlgebraType::from_solution(sol)));
    if (!out.no_timings) c.wall_ms = ms_since(case_start);
    r.cases.push_back(std::move(c));
  }
  if (!out.no_timings) r.total_ms = ms_since(start);
  return emit(r, out);
}

int run_eliminate(const std::string& type_str, std::optional<i64> dim,
                  const std::string& group_sel, i64 budget, const std::string& focus,
                  const OutputOptions& out) {
  const auto start = Clock::now();
  const auto t = profile::AlgebraType::parse(type_str);
  if (dim && *dim != t.dim()) {
    std::cerr << "hopfcheck: --dim " << *dim << " does not match the type dimension "
              << t.dim() << "\n";
    return 2;
  }
  if (t.g_order() < 1) {
    std::cerr << "hopfcheck: type " << t.str() << " has no grouplike part to search over\n";
    return 2;
  }

  std::vector<grp::Group> classes;
  for (auto& g : grp::abelian_groups_of_order(t.g_order()))
    if (group_sel == "all" || g.name == group_sel) classes.push_back(std::move(g));
  if (classes.empty()) {
    std::cerr << "hopfcheck: no abelian group class named '" << group_sel
              << "' at order " << t.g_order() << "; available:";
    for (const auto& g : grp::abelian_groups_of_order(t.g_order()))
      std::cerr << " " << g.name;
    std::cerr << " all\n";
    return 2;
  }

  fusion::SearchOptions opts;
  opts.node_budget = budget;
  opts.focus_all = focus == "all";

  report::Report r;
  r.config.command = "eliminate";
  r.config.params = {{"type", t.str()},
                     {"group", group_sel},
                     {"budget", num(budget)},
                     {"focus", focus}};
  echo_output_params(r, out);

  bool budget_hit = false;
  for (const auto& g : classes) {
    const auto case_start = Clock::now();
    const auto res = fusion::search_consistent_table(t, g, opts);
    report::FusionRun run;
    run.type = t;
    run.group = g.name;
    run.outcome = res.outcome;
    run.stats = res.stats;
    run.trace = res.trace;
    if (res.witness) run.witness = report::witness_summary(*res.witness);
    auto c = report::fusion_case(run);
    if (!out.no_timings) c.wall_ms = ms_since(case_start);
    r.cases.push_back(std::move(c));
    budget_hit = budget_hit || res.outcome == fusion::Outcome::BudgetExceeded;
  }
  if (budget_hit)
    r.findings.push_back({"budget-exhausted",
                          "the node budget of " + num(budget) + " ran out before a verdict"});
  if (!out.no_timings) r.total_ms = ms_since(start);
  const int rc = emit(r, out);
  if (rc != 0) return rc;
  return budget_hit ? 3 : 0;
}

int run_classify(i64 p, i64 q, const OutputOptions& out) {
  const auto start = Clock::now();
  const auto verdicts = p == 2 ? verdict::classify_4q2(q) : verdict::classify_p2q2(p, q);
  if (verdicts.size() == 1 && verdicts[0].outcome == verdict::Outcome::Unsupported) {
    const std::string why = verdicts[0].trace.steps.empty()
                                ? std::string("classification unsupported for these parameters")
                                : verdicts[0].trace.steps[0].detail;
    std::cerr << "hopfcheck: " << why << "\n";
    return 2;
  }

  report::Report r;
  r.config.command = "classify";
  r.config.params = {{"p", num(p)}, {"q", num(q)}};
  echo_output_params(r, out);

  bool budget_hit = false;
  for (const auto& v : verdicts) {
    if (v.outcome == verdict::Outcome::Unsupported) {
      bool budget = false;
      for (const auto& s : v.trace.steps)
        if (s.detail.find("budget") != std::string::npos) budget = true;
      budget_hit = budget_hit || budget;
      r.findings.push_back({budget ? "budget-exhausted" : "unestablished-case",
                            "case g=" + num(v.g_order) + " could not be certified"});
    }
    r.cases.push_back(report::verdict_case(v));
  }
  if (!out.no_timings) r.total_ms = ms_since(start);
  const int rc = emit(r, out);
  if (rc != 0) return rc;
  if (budget_hit) return 3;
  return r.findings.empty() ? 0 : 1;
}

int run_verify(i64 budget, i64 instances, i64 seed, const OutputOptions& out) {
  verify::VerifyOptions opts;
  opts.node_budget = budget;
  opts.no_timings = out.no_timings;
  opts.property_instances = static_cast<int>(instances);
  opts.property_seed = static_cast<unsigned>(seed);
  auto r = verify::verify_full(opts);
  echo_output_params(r, out);

  bool all_passed = true;
  for (const auto& c : r.cases)
    if (c.criterion && !c.criterion->passed) all_passed = false;
  for (const auto& c : r.cases) {
    if (!c.criterion) continue;
    std::cerr << "criterion " << c.criterion->index << " (" << c.criterion->name
              << "): " << (c.criterion->passed ? "pass" : "FAIL") << "\n";
  }
  const int rc = emit(r, out);
  if (rc != 0) return rc;
  return all_passed && r.findings.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constraint-enumeration checks for semisimple algebras of dimension p^2 q^2"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hopfcheck::report::kVersion));

  i64 en_p = 0, en_q = 0, en_g = 0;
  std::vector<std::string> en_pins;
  OutputOptions en_out;
  auto* enumerate = app.add_subcommand(
      "enumerate", "List the dimension-equation solutions at one grouplike order and screen each");
  enumerate->add_option("--p", en_p, "Smaller prime")->required();
  enumerate->add_option("--q", en_q, "Larger prime")->required();
  enumerate->add_option("--g", en_g, "Grouplike order of the dual")->required();
  enumerate->add_option("--pin", en_pins,
                        "Pin a degree count, e.g. a=0 (a: degree p, b: degree p^2, c: degree q); "
                        "repeatable");
  add_output_flags(enumerate, en_out);

  std::string el_type;
  i64 el_dim = 0;
  std::string el_group = "all";
  i64 el_budget = 10'000'000;
  std::string el_focus = "default";
  OutputOptions el_out;
  auto* eliminate = app.add_subcommand(
      "eliminate", "Search for a consistent character ring for one explicit type");
  eliminate->add_option("--type", el_type, "Algebra type, e.g. \"(1,2;4,3;5,2)\"")->required();
  auto* el_dim_opt =
      eliminate->add_option("--dim", el_dim, "Expected dimension, cross-checked against the type");
  eliminate->add_option("--group", el_group, "Abelian group class name, or 'all'")
      ->capture_default_str();
  eliminate->add_option("--budget", el_budget, "Search node budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eliminate->add_option("--focus", el_focus, "Focus rows to decide: 'default' or 'all'")
      ->check(CLI::IsMember({"default", "all"}))
      ->capture_default_str();
  add_output_flags(eliminate, el_out);

  i64 cl_p = 0, cl_q = 0;
  OutputOptions cl_out;
  auto* classify = app.add_subcommand(
      "classify", "Produce one structural verdict per grouplike-order case at dimension p^2 q^2");
  classify->add_option("--p", cl_p, "Smaller prime")->required();
  classify->add_option("--q", cl_q, "Larger prime")->required();
  add_output_flags(classify, cl_out);

  i64 vf_budget = 10'000'000, vf_instances = 120, vf_seed = 20260814;
  OutputOptions vf_out;
  auto* verify_cmd = app.add_subcommand(
      "verify-paper", "Run every acceptance criterion of the reproduction suite");
  verify_cmd->add_option("--budget", vf_budget, "Search node budget for the refutation criteria")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--instances", vf_instances, "Randomized property instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", vf_seed, "Seed for the randomized property suite")
      ->capture_default_str();
  add_output_flags(verify_cmd, vf_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*enumerate) return run_enumerate(en_p, en_q, en_g, en_pins, en_out);
    if (*eliminate)
      return run_eliminate(el_type,
                           el_dim_opt->count() ? std::optional<i64>(el_dim) : std::nullopt,
                           el_group, el_budget, el_focus, el_out);
    if (*classify) return run_classify(cl_p, cl_q, cl_out);
    return run_verify(vf_budget, vf_instances, vf_seed, vf_out);
  } catch (const hopfcheck::Error& e) {
    std::cerr << "hopfcheck: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hopfcheck: internal error: " << e.what() << "\n";
    return 2;
  }
}
