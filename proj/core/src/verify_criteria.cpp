#include <chrono>
#include <random>
#include <sstream>

#include "hopfcheck/chartable.hpp"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/group.hpp"
#include "hopfcheck/verify.hpp"

namespace hopfcheck::verify {

namespace {

using profile::AlgebraType;
using report::CriterionResult;
using report::Finding;
using report::Report;

constexpr i64 kSmallQ[4] = {5, 7, 11, 13};

struct CriterionRun {
  CriterionResult result;
  std::vector<Finding> findings;
  std::ostringstream log;

  CriterionRun(int index, std::string name) {
    result.index = index;
    result.name = std::move(name);
    result.passed = true;
  }

  void fail(const std::string& why) {
    result.passed = false;
    findings.push_back({"criterion-failed",
                        "criterion " + std::to_string(result.index) + " (" +
                            result.name + "): " + why});
    log << "FAIL: " << why << "\n";
  }

  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }

  void finding(const std::string& kind, const std::string& why) {
    result.passed = false;
    findings.push_back({kind, why});
    log << "FINDING (" << kind << "): " << why << "\n";
  }

  CriterionResult finish() {
    std::string text = log.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    result.detail = text.empty() ? "ok" : text;
    return result;
  }
};

std::string counts_str(const std::map<i64, i64>& counts) {
  std::string s = "{";
  for (const auto& [d, n] : counts)
    s += std::to_string(d) + ":" + std::to_string(n) + ",";
  s += "}";
  return s;
}

/** Criteria 1-4: the four pinned enumerations at a = 0. */
void pinned_enumeration(CriterionRun& c, i64 g_of_q(i64),
                        const std::map<i64, std::map<i64, i64>>& expected) {
  for (i64 q : kSmallQ) {
    const i64 dim = 4 * q * q, g = g_of_q(q);
    const auto sols = arith::enumerate_dimension_solutions(dim, g, {2, 4, q}, {{2, 0}});
    const auto it = expected.find(q);
    if (it == expected.end()) {
      c.require(sols.empty(), "q=" + std::to_string(q) + ": expected no solution, got " +
                                  std::to_string(sols.size()));
      if (sols.empty()) c.log << "q=" << q << ": empty as pinned\n";
      continue;
    }
    if (sols.size() != 1 || sols[0].counts != it->second) {
      std::string got;
      for (const auto& s : sols) got += counts_str(s.counts) + " ";
      c.fail("q=" + std::to_string(q) + ": expected " + counts_str(it->second) +
             ", got [" + got + "]");
    } else {
      c.log << "q=" << q << ": " << counts_str(sols[0].counts) << "\n";
    }
  }
}

CriterionResult criterion_1(CriterionRun c) {
  pinned_enumeration(
      c, [](i64) -> i64 { return 2; },
      {{5, {{1, 2}, {2, 0}, {4, 3}, {5, 2}}},
       {7, {{1, 2}, {2, 0}, {4, 6}, {7, 2}}},
       {11, {{1, 2}, {2, 0}, {4, 15}, {11, 2}}},
       {13, {{1, 2}, {2, 0}, {4, 21}, {13, 2}}}});
  return c.finish();
}

CriterionResult criterion_2(CriterionRun c) {
  pinned_enumeration(c, [](i64 q) { return q; },
                     {{11, {{1, 11}, {2, 0}, {4, 22}, {11, 1}}}});
  return c.finish();
}

CriterionResult criterion_3(CriterionRun c) {
  pinned_enumeration(
      c, [](i64 q) { return q * q; },
      {{5, {{1, 25}, {2, 0}, {4, 0}, {5, 3}}},
       {7, {{1, 49}, {2, 0}, {4, 0}, {7, 3}}},
       {11, {{1, 121}, {2, 0}, {4, 0}, {11, 3}}},
       {13, {{1, 169}, {2, 0}, {4, 0}, {13, 3}}}});
  return c.finish();
}

CriterionResult criterion_4(CriterionRun c) {
  pinned_enumeration(c, [](i64 q) { return 2 * q; }, {});
  return c.finish();
}

const char* kRefutedTypes[5] = {"(1,2;4,3;5,2)", "(1,2;4,6;7,2)", "(1,2;4,15;11,2)",
                                "(1,2;4,21;13,2)", "(1,11;4,22;11,1)"};

CriterionResult criterion_5(CriterionRun c, const VerifyOptions& options,
                            std::vector<Finding>& findings) {
  for (const char* ts : kRefutedTypes) {
    const auto t = AlgebraType::parse(ts);
    for (const auto& g : grp::abelian_groups_of_order(t.g_order())) {
      fusion::SearchOptions opt;
      opt.node_budget = options.node_budget;
      const auto res = fusion::search_consistent_table(t, g, opt);
      if (res.outcome == fusion::Outcome::Feasible)
        c.finding("unexpected-feasible", std::string(ts) + " over " + g.name +
                                             " admits a consistent table");
      else if (res.outcome == fusion::Outcome::BudgetExceeded)
        c.finding("budget-exhausted", std::string(ts) + " over " + g.name +
                                          " ran out of nodes");
      else
        c.log << ts << " over " << g.name << ": refuted in " << res.stats.nodes
              << " nodes\n";
    }
  }
  for (const auto& f : c.findings) findings.push_back(f);
  return c.finish();
}

CriterionResult criterion_6(CriterionRun c) {
  const auto t = AlgebraType::parse("(1,2;4,21;13,2)");
  const auto g = grp::abelian_groups_of_order(2)[0];
  const auto res = fusion::search_consistent_table(t, g);
  c.require(res.outcome == fusion::Outcome::Infeasible, "expected a refutation");
  c.require(res.stats.nodes == 0, "expected 0 nodes, got " +
                                      std::to_string(res.stats.nodes));
  if (res.root_contradiction)
    c.log << "root rule: " << res.root_contradiction->rule << ", nodes "
          << res.stats.nodes;
  else if (res.outcome == fusion::Outcome::Infeasible)
    c.fail("no root contradiction recorded");
  return c.finish();
}

CriterionResult criterion_7(CriterionRun c) {
  int groups = 0;
  for (i64 n = 1; n <= 16; ++n) {
    for (const auto& g : grp::abelian_groups_of_order(n)) {
      const auto table = chart::fusion_table_of(g);
      const auto problems = fusion::validate_table(table);
      if (!problems.empty()) {
        c.fail(g.name + ": oracle table fails validation: " + problems.front());
        continue;
      }
      const auto res = fusion::search_consistent_table(table.type, g);
      c.require(res.outcome == fusion::Outcome::Feasible,
                g.name + ": search did not confirm the oracle type");
      ++groups;
    }
  }
  c.log << groups << " group tables validated and confirmed";
  return c.finish();
}

CriterionResult criterion_8(CriterionRun c) {
  const std::pair<i64, i64> pairs[3] = {{2, 17}, {2, 19}, {3, 83}};
  for (const auto& [p, q] : pairs) {
    const i64 dim = p * p * q * q;
    for (i64 offset : {p, p * q, p * p * q}) {
      if (!arith::no_solution_check(dim, offset, q * q))
        c.fail("dim " + std::to_string(dim) + " = " + std::to_string(offset) +
               " + c*q^2 unexpectedly has a solution");
    }
    c.log << "p=" << p << " q=" << q << ": three certificates hold\n";
  }
  return c.finish();
}

bool small_labels_ok(i64 q, std::string& why) {
  using verdict::Outcome;
  const Outcome key[9] = {Outcome::Impossible,
                          Outcome::UpperSemisolvable,
                          Outcome::SemisolvableOrBiproduct,
                          Outcome::Impossible,
                          Outcome::UpperSemisolvable,
                          Outcome::SemisolvableOrBiproduct,
                          Outcome::UpperSemisolvable,
                          Outcome::UpperSemisolvable,
                          Outcome::DualGroupAlgebra};
  const auto vs = verdict::classify_4q2(q);
  if (vs.size() != 9) {
    why = "expected 9 cases, got " + std::to_string(vs.size());
    return false;
  }
  const auto divs = arith::divisors(4 * q * q);
  for (int i = 0; i < 9; ++i) {
    if (vs[i].g_order != divs[i]) {
      why = "case " + std::to_string(i) + " has g=" + std::to_string(vs[i].g_order);
      return false;
    }
    if (vs[i].outcome != key[i]) {
      why = "g=" + std::to_string(vs[i].g_order) + " resolved to " +
            verdict::outcome_name(vs[i].outcome);
      return false;
    }
  }
  return true;
}

CriterionResult criterion_9(CriterionRun c) {
  for (i64 q : kSmallQ) {
    std::string why;
    if (small_labels_ok(q, why))
      c.log << "q=" << q << ": all nine labels match\n";
    else
      c.fail("q=" + std::to_string(q) + ": " + why);
  }
  return c.finish();
}

CriterionResult criterion_10(CriterionRun c) {
  c.require(arith::coideal_obstruction(5, 1283).obstructed,
            "expected an obstruction at p=5, q=1283");
  const auto vs = verdict::classify_p2q2(5, 1283);
  for (const auto& v : vs)
    if (v.g_order == 25 || v.g_order == 25 * 1283)
      c.require(v.outcome == verdict::Outcome::LowerSemisolvable,
                "g=" + std::to_string(v.g_order) + " was not sharpened");
  for (i64 q : {3, 5, 7, 11, 13, 17, 19, 101, 1283})
    c.require(!arith::coideal_obstruction(2, q).obstructed,
              "p=2, q=" + std::to_string(q) + " reported an obstruction");
  c.log << "sharpening holds at (5,1283); p=2 is never obstructed";
  return c.finish();
}

struct RandomTypes {
  std::mt19937_64 rng;
  explicit RandomTypes(i64 seed) : rng(static_cast<uint64_t>(seed)) {}

  i64 pick(i64 lo, i64 hi) {
    return std::uniform_int_distribution<i64>(lo, hi)(rng);
  }

  /** A random type of dimension <= 1000 with at least its grouplike part. */
  AlgebraType next() {
    const i64 g = pick(1, 8);
    std::map<i64, i64> counts{{1, g}};
    i64 dim = g;
    const i64 target = pick(dim, 1000);
    const int extra = static_cast<int>(pick(0, 2));
    for (int i = 0; i < extra; ++i) {
      const i64 d = pick(2, 6);
      const i64 room = (target - dim) / (d * d);
      if (room < 1) break;
      counts[d] += pick(1, std::min<i64>(room, 4));
      dim += counts[d] * d * d;  // overcounts on repeat but only shrinks room
    }
    std::vector<std::pair<i64, i64>> entries(counts.begin(), counts.end());
    return AlgebraType{entries};
  }
};

CriterionResult criterion_11(CriterionRun c, const VerifyOptions& options) {
  const int n = std::max(options.property_instances, 100);
  RandomTypes gen(options.property_seed);
  int idempotence = 0, relabeling = 0, reruns = 0, roundtrips = 0, budget_skips = 0;
  for (int i = 0; i < n; ++i) {
    const auto t = gen.next();
    const auto classes = grp::abelian_groups_of_order(t.g_order());
    const auto& g = classes[static_cast<size_t>(gen.pick(0, classes.size() - 1))];

    const auto sk = fusion::build_skeleton(t, g);
    const auto r1 = fusion::propagate(sk);
    if (r1.ok()) {
      const auto r2 = fusion::propagate(*r1.table);
      if (!r2.ok() || !(*r2.table == *r1.table)) {
        c.fail("propagation is not idempotent on " + t.str() + " over " + g.name);
        continue;
      }
    }
    ++idempotence;

    fusion::SearchOptions opt;
    opt.node_budget = 4'000;
    const auto res = fusion::search_consistent_table(t, g, opt);
    fusion::SearchOptions relabeled = opt;
    relabeled.order_seed = i + 1;
    const auto res2 = fusion::search_consistent_table(t, g, relabeled);
    if (res.outcome == fusion::Outcome::BudgetExceeded ||
        res2.outcome == fusion::Outcome::BudgetExceeded) {
      ++budget_skips;
    } else {
      if (res.outcome != res2.outcome) {
        c.fail("feasibility of " + t.str() + " over " + g.name +
               " changed under relabeling");
        continue;
      }
      ++relabeling;
    }

    const auto res3 = fusion::search_consistent_table(t, g, opt);
    if (!(res3.outcome == res.outcome && res3.trace == res.trace &&
          res3.stats == res.stats)) {
      c.fail("re-running the search on " + t.str() + " over " + g.name +
             " did not reproduce the trace");
      continue;
    }
    ++reruns;

    report::Report r;
    r.config.command = "eliminate";
    r.config.params = {{"type", t.str()}, {"group", g.name}};
    r.cases.push_back(report::fusion_case({t, g.name, res.outcome, res.stats, res.trace}));
    if (report::from_json(report::to_json(r)) != r) {
      c.fail("report for " + t.str() + " does not survive a JSON round-trip");
      continue;
    }
    ++roundtrips;
  }

  int replayed = 0;
  for (i64 q : kSmallQ)
    for (const auto& v : verdict::classify_4q2(q)) {
      const auto rep = replay_case(v);
      if (!rep.ok()) {
        c.fail("replay of q=" + std::to_string(q) + " g=" + std::to_string(v.g_order) +
               " failed: " + rep.issues.front().where + " " + rep.issues.front().detail);
        continue;
      }
      ++replayed;
    }
  for (const auto& v : verdict::classify_p2q2(5, 1283)) {
    const auto rep = replay_case(v);
    if (!rep.ok())
      c.fail("replay of (5,1283) g=" + std::to_string(v.g_order) + " failed: " +
             rep.issues.front().detail);
    else
      ++replayed;
  }
  c.log << idempotence << " idempotence, " << relabeling << " relabeling ("
        << budget_skips << " budget skips), " << reruns << " re-runs, " << roundtrips
        << " round-trips, " << replayed << " replayed verdicts";
  return c.finish();
}

Report deterministic_subreport(const VerifyOptions& options) {
  Report r;
  r.config.command = "verify-paper";
  r.config.params = {{"node_budget", std::to_string(options.node_budget)},
                     {"subset", "determinism"}};
  r.cases.push_back(report::criterion_case(criterion_1({1, "pinned-enumeration-g2"})));
  r.cases.push_back(report::criterion_case(criterion_2({2, "pinned-enumeration-gq"})));
  r.cases.push_back(report::criterion_case(criterion_3({3, "pinned-enumeration-gq2"})));
  r.cases.push_back(report::criterion_case(criterion_4({4, "pinned-enumeration-g2q"})));
  r.cases.push_back(report::criterion_case(criterion_8({8, "divisibility-certificates"})));
  r.cases.push_back(report::criterion_case(criterion_9({9, "small-regime-answer-key"})));
  for (i64 q : kSmallQ)
    for (const auto& v : verdict::classify_4q2(q))
      r.cases.push_back(report::verdict_case(v));
  return r;
}

CriterionResult criterion_12(CriterionRun c, const VerifyOptions& options) {
  const auto a = report::to_json(deterministic_subreport(options));
  const auto b = report::to_json(deterministic_subreport(options));
  c.require(a == b, "two runs serialized differently");
  if (a == b)
    c.log << "two full re-runs serialized to " << a.size() << " identical bytes";
  return c.finish();
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

}  // namespace

report::Report verify_full(const VerifyOptions& options) {
  Report r;
  r.config.command = "verify-paper";
  r.config.params = {
      {"node_budget", std::to_string(options.node_budget)},
      {"no_timings", options.no_timings ? "true" : "false"},
      {"property_instances", std::to_string(options.property_instances)},
      {"property_seed", std::to_string(options.property_seed)}};

  const auto add = [&](CriterionResult cr) {
    if (!cr.passed)
      r.findings.push_back({"criterion-failed",
                            "criterion " + std::to_string(cr.index) + " (" + cr.name +
                                "): " + cr.detail});
    return report::criterion_case(cr);
  };
  const auto timed = [&](auto&& make) {
    const auto start = std::chrono::steady_clock::now();
    auto c = make();
    if (!options.no_timings) c.wall_ms = ms_since(start);
    r.cases.push_back(std::move(c));
  };

  timed([&] { return add(criterion_1({1, "pinned-enumeration-g2"})); });
  timed([&] { return add(criterion_2({2, "pinned-enumeration-gq"})); });
  timed([&] { return add(criterion_3({3, "pinned-enumeration-gq2"})); });
  timed([&] { return add(criterion_4({4, "pinned-enumeration-g2q"})); });
  timed([&] {
    CriterionRun c{5, "fusion-refutations"};
    auto cr = criterion_5(std::move(c), options, r.findings);
    return report::criterion_case(cr);
  });
  timed([&] { return add(criterion_6({6, "root-refutation-node-count"})); });
  timed([&] { return add(criterion_7({7, "character-table-oracles"})); });
  timed([&] { return add(criterion_8({8, "divisibility-certificates"})); });
  timed([&] { return add(criterion_9({9, "small-regime-answer-key"})); });
  timed([&] { return add(criterion_10({10, "obstruction-sharpening"})); });
  timed([&] { return add(criterion_11({11, "property-suites"}, options)); });
  timed([&] { return add(criterion_12({12, "determinism"}, options)); });
  return r;
}

}  // namespace hopfcheck::verify
