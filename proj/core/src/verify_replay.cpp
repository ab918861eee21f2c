#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "hopfcheck/errors.hpp"
#include "hopfcheck/group.hpp"
#include "hopfcheck/rules.hpp"
#include "hopfcheck/verify.hpp"

namespace hopfcheck::verify {

namespace {

using profile::AlgebraType;
using trace::TraceStep;
using verdict::CaseVerdict;
using verdict::Outcome;

struct Replayer {
  const CaseVerdict& v;
  i64 fusion_budget;
  std::vector<ReplayIssue> issues;
  bool fusion_refuted = false;

  void issue(const TraceStep& s, const std::string& detail) {
    issues.push_back({"[" + s.rule + "] " + s.detail.substr(0, 60), detail});
  }

  static std::optional<i64> get_i64(const TraceStep& s, const std::string& key) {
    auto it = s.data.find(key);
    if (it == s.data.end()) return std::nullopt;
    try {
      return std::stoll(it->second);
    } catch (...) {
      return std::nullopt;
    }
  }

  i64 need_i64(const TraceStep& s, const std::string& key) {
    auto n = get_i64(s, key);
    if (!n) {
      issue(s, "missing or non-numeric data field '" + key + "'");
      return -1;
    }
    return *n;
  }

  bool is_search_emitted(const TraceStep& s) const {
    return s.data.count("type") && s.data.count("group") && s.data.count("budget") &&
           s.data.count("focus");
  }

  void check_no_solution(const TraceStep& s) {
    const i64 dim = need_i64(s, "dim"), offset = need_i64(s, "offset"),
              square = need_i64(s, "square");
    if (dim < 0 || offset < 0 || square < 1) return;
    if (!arith::no_solution_check(dim, offset, square))
      issue(s, "recomputation finds a solution of the recorded equation");
  }

  void check_empty_enumeration(const TraceStep& s) {
    const i64 dim = need_i64(s, "dim"), g = need_i64(s, "g");
    if (dim < 0 || g < 0) return;
    std::vector<i64> degrees;
    {
      std::stringstream ss(s.data.count("degrees") ? s.data.at("degrees") : "");
      std::string tok;
      while (std::getline(ss, tok, ',')) degrees.push_back(std::stoll(tok));
    }
    std::map<i64, i64> pins;
    if (auto it = s.data.find("pins"); it != s.data.end() && !it->second.empty()) {
      std::stringstream ss(it->second);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
          issue(s, "unreadable pin '" + tok + "'");
          return;
        }
        pins[std::stoll(tok.substr(0, eq))] = std::stoll(tok.substr(eq + 1));
      }
    }
    if (degrees.empty()) {
      issue(s, "no degrees recorded");
      return;
    }
    if (!arith::enumerate_dimension_solutions(dim, g, degrees, pins).empty())
      issue(s, "the recorded pinned enumeration is not empty on recomputation");
  }

  void check_filter_exclusion(const TraceStep& s) {
    AlgebraType t;
    try {
      t = AlgebraType::parse(s.data.at("type"));
    } catch (const Error& e) {
      issue(s, e.what());
      return;
    }
    const auto rep = profile::screen_one(v.profile, t);
    if (rep.passed) {
      issue(s, "re-screening does not exclude the recorded type");
      return;
    }
    if (std::none_of(rep.failures.begin(), rep.failures.end(),
                     [&](const auto& f) { return f.rule == s.rule; }))
      issue(s, "re-screening excludes the type under a different rule");
  }

  void check_dimension_equation(const TraceStep& s) {
    const i64 p = v.profile.p, q = v.profile.q, dim = v.profile.dim();
    if (s.data.count("solutions")) {
      const i64 g = need_i64(s, "g"), want = need_i64(s, "solutions");
      if (g < 1 || want < 0) return;
      const auto sols =
          arith::enumerate_dimension_solutions(dim, g, {p, p * p, q}, {});
      if (static_cast<i64>(sols.size()) != want)
        issue(s, "recomputed solution count " + std::to_string(sols.size()) +
                     " differs from recorded " + std::to_string(want));
    } else if (s.data.count("type")) {
      const i64 g = need_i64(s, "g");
      if (g < 1) return;
      if (dim != g + (p * p - 1) * q * q) {
        issue(s, "the forced degree-q count does not match the dimension");
        return;
      }
      const AlgebraType want{{{1, q * q}, {q, p * p - 1}}};
      if (s.data.at("type") != want.str())
        issue(s, "recorded type differs from the forced type " + want.str());
    } else {
      const i64 g = need_i64(s, "g");
      if (g >= 1 && g % (p * p) == 0)
        issue(s, "g is divisible by p^2, so c >= 1 is not forced this way");
    }
  }

  void check_masuoka(const TraceStep& s) {
    const i64 p = v.profile.p;
    const i64 quotient = need_i64(s, "quotient"), g = need_i64(s, "g");
    if (quotient < 0 || g < 0) return;
    if (quotient != p * p) issue(s, "the excluded quotient is not p^2");
    if (g % (p * p) == 0) issue(s, "p^2 divides g, so the exclusion does not apply");
  }

  void check_candidates(const TraceStep& s) {
    if (!s.data.count("candidates")) return;
    const i64 p = v.profile.p, dim = v.profile.dim();
    std::string want;
    for (i64 d : arith::divisors(dim))
      if (d % p == 0 && d < dim) want += (want.empty() ? "" : ",") + std::to_string(d);
    if (s.data.at("candidates") != want)
      issue(s, "recorded candidate quotients differ from the recomputed set " + want);
  }

  void check_stabilizer_residual(const TraceStep& s) {
    const i64 p = v.profile.p;
    if (auto g = get_i64(s, "g")) {
      if (arith::gcd(p * p, *g) != 1)
        issue(s, "gcd(p^2, g) is not 1, so the trivial-stabilizer claim fails");
    } else if (s.data.count("residual")) {
      if (need_i64(s, "degree") != 2 || need_i64(s, "residual") != 3 ||
          arith::gcd(i64{4}, v.profile.q) != 1)
        issue(s, "the residual-3 summary does not match the profile");
    }
  }

  void check_two_part_survivor(const TraceStep& s) {
    AlgebraType t;
    try {
      t = AlgebraType::parse(s.data.at("type"));
    } catch (const Error& e) {
      issue(s, e.what());
      return;
    }
    const i64 p = v.profile.p, q = v.profile.q;
    const i64 quotient = need_i64(s, "quotient");
    if (quotient < 0) return;
    if (quotient != v.g_order + p * p * t.count_at(p))
      issue(s, "recorded quotient is not g + p^2 * a for the recorded type");
    if (quotient != p * q * q)
      issue(s, "the quotient dimension is not pq^2, so semisolvability does not follow");
  }

  void check_quotient_dimension(const TraceStep& s) {
    const i64 d = need_i64(s, "dimension");
    if (d < 1) return;
    if (d != v.profile.p * v.profile.q * v.profile.q)
      issue(s, "the recorded dimension is not pq^2");
    if (v.profile.dim() % d != 0) issue(s, "the recorded dimension does not divide dim H");
  }

  void check_orbit_stabilizer(const TraceStep& s) {
    const i64 g = need_i64(s, "g"), class_size = need_i64(s, "class_size");
    if (g < 1 || class_size < 0) return;
    for (i64 l : arith::divisors(g))
      if (l != 1 && l <= class_size) {
        issue(s, "orbit length " + std::to_string(l) + " also fits the class");
        return;
      }
  }

  void check_grouplike_normality(const TraceStep& s) {
    const i64 g = need_i64(s, "g");
    if (g >= 1 && g != v.profile.q * v.profile.q)
      issue(s, "normality is only derived at grouplike order q^2");
  }

  void check_dichotomy(const TraceStep& s) {
    const i64 p = v.profile.p, q = v.profile.q;
    if (need_i64(s, "group_order") != p * p)
      issue(s, "the recorded biproduct group order is not p^2");
    if (need_i64(s, "r_dimension") != q * q)
      issue(s, "the recorded coinvariant dimension is not q^2");
    const i64 g = need_i64(s, "g");
    if (g >= 1 && g % (p * p) != 0)
      issue(s, "p^2 does not divide g, so the dichotomy does not apply");
  }

  void check_coideal_obstruction(const TraceStep& s) {
    const i64 p = need_i64(s, "p"), q = need_i64(s, "q");
    if (p < 2 || q < 2) return;
    if (!arith::coideal_obstruction(p, q).obstructed)
      issue(s, "recomputation finds no obstruction for the recorded primes");
  }

  void check_nontrivial_grouplike(const TraceStep& s) {
    if (need_i64(s, "g") != 1) {
      issue(s, "the axiom step applies only at grouplike order 1");
      return;
    }
    if (auto want = get_i64(s, "solutions")) {
      const auto reports = profile::screen_types(v.profile, 1);
      if (static_cast<i64>(reports.size()) != *want) {
        issue(s, "recomputed solution count differs from the recorded one");
        return;
      }
      for (const auto& r : reports)
        if (r.passed ||
            std::none_of(r.failures.begin(), r.failures.end(), [&](const auto& f) {
              return f.rule == "nontrivial-grouplike";
            })) {
          issue(s, "a type at grouplike order 1 escapes the filter on recomputation");
          return;
        }
    }
  }

  void check_dual_group_algebra(const TraceStep& s) {
    if (need_i64(s, "g") != v.profile.dim())
      issue(s, "the grouplike order is below the dimension");
  }

  /** Re-runs every distinct recorded search and matches its steps. */
  void replay_searches() {
    std::set<std::tuple<std::string, std::string, i64, std::string>> seen;
    for (const auto& s : v.trace.steps) {
      if (!is_search_emitted(s)) continue;
      const auto key = std::make_tuple(s.data.at("type"), s.data.at("group"),
                                       *get_i64(s, "budget"), s.data.at("focus"));
      if (!seen.insert(key).second) continue;
      replay_one_search(s);
    }
  }

  void replay_one_search(const TraceStep& ref) {
    AlgebraType t;
    try {
      t = AlgebraType::parse(ref.data.at("type"));
    } catch (const Error& e) {
      issue(ref, e.what());
      return;
    }
    const std::string& gname = ref.data.at("group");
    const grp::Group* group = nullptr;
    std::vector<grp::Group> classes;
    try {
      classes = grp::abelian_groups_of_order(t.g_order());
    } catch (const Error& e) {
      issue(ref, e.what());
      return;
    }
    for (const auto& g : classes)
      if (g.name == gname) group = &g;
    if (!group) {
      issue(ref, "no abelian class named " + gname + " at order " +
                     std::to_string(t.g_order()));
      return;
    }
    const std::string& focus = ref.data.at("focus");
    if (focus == "explicit") return;  // focus rows are not recoverable from the trace
    fusion::SearchOptions opt;
    opt.node_budget = fusion_budget > 0 ? fusion_budget : *get_i64(ref, "budget");
    opt.focus_all = focus == "all";
    const auto res = fusion::search_consistent_table(t, *group, opt);
    if (res.outcome == fusion::Outcome::Infeasible) fusion_refuted = true;
    for (const auto& s : v.trace.steps) {
      if (!is_search_emitted(s)) continue;
      if (s.data.at("type") != ref.data.at("type") ||
          s.data.at("group") != ref.data.at("group"))
        continue;
      const bool reproduced =
          std::any_of(res.trace.steps.begin(), res.trace.steps.end(),
                      [&](const auto& rs) {
                        return rs.rule == s.rule && rs.detail == s.detail;
                      });
      if (!reproduced && fusion_budget > 0 &&
          res.outcome == fusion::Outcome::BudgetExceeded)
        continue;  // the capped re-run stopped early; not a divergence
      if (!reproduced)
        issue(s, "the re-run search over " + gname + " does not reproduce this step");
    }
  }

  void check_outcome_support() {
    const auto has = [&](const std::string& rule) {
      return std::any_of(v.trace.steps.begin(), v.trace.steps.end(),
                         [&](const auto& s) { return s.rule == rule; });
    };
    const auto has_exclusion_step = [&] {
      return std::any_of(v.trace.steps.begin(), v.trace.steps.end(), [&](const auto& s) {
        return s.data.count("type") && !is_search_emitted(s) && s.rule != "search-branch" &&
               s.rule != "two-part-quotient" && s.rule != "dimension-equation";
      });
    };
    const ReplayIssue unsupported{
        "outcome", "the recorded outcome is not supported by the steps present"};
    switch (v.outcome) {
      case Outcome::DualGroupAlgebra:
        if (v.g_order != v.profile.dim() || !has("dual-group-algebra"))
          issues.push_back(unsupported);
        break;
      case Outcome::Impossible:
        if (!(has("empty-enumeration") || has("no-solution") || fusion_refuted ||
              has_exclusion_step() || (v.g_order == 1 && has("nontrivial-grouplike"))))
          issues.push_back(unsupported);
        break;
      case Outcome::UpperSemisolvable:
        if (!(has("quotient-semisolvable") || has("subalgebra-semisolvable") ||
              has("grouplike-normality")))
          issues.push_back(unsupported);
        break;
      case Outcome::LowerSemisolvable:
        if (!has("coideal-obstruction")) issues.push_back(unsupported);
        break;
      case Outcome::SemisolvableOrBiproduct:
        if (!(has("semisolvable-or-biproduct") || has("dim36-classified")))
          issues.push_back(unsupported);
        break;
      case Outcome::BiproductCandidate:
        if (!has("biproduct-gcd")) issues.push_back(unsupported);
        break;
      case Outcome::Unsupported:
        if (!has("search-branch")) issues.push_back(unsupported);
        break;
    }
    if (v.outcome == Outcome::DualGroupAlgebra && v.g_order != v.profile.dim())
      issues.push_back({"outcome", "dual-group-algebra verdict below full dimension"});
    if (v.outcome != Outcome::DualGroupAlgebra && v.g_order == v.profile.dim())
      issues.push_back({"outcome", "full grouplike order must yield dual-group-algebra"});
  }

  void run() {
    for (const auto& s : v.trace.steps) {
      if (!rules::has_rule(s.rule)) {
        issue(s, "rule is not in the catalog");
        continue;
      }
      if (s.citation != rules::rule(s.rule).citation) {
        issue(s, "citation differs from the catalog entry");
        continue;
      }
      if (is_search_emitted(s)) continue;  // matched against the re-run below
      try {
        dispatch(s);
      } catch (const std::exception& e) {
        issue(s, std::string("replay check failed to run: ") + e.what());
      }
    }
    try {
      replay_searches();
    } catch (const std::exception& e) {
      issues.push_back({"search replay", e.what()});
    }
    check_outcome_support();
    const auto allowed = profile::frobenius_degree_set(v.profile);
    for (const auto& t : v.surviving_types) {
      if (t.dim() != v.profile.dim())
        issues.push_back({"surviving " + t.str(), "type dimension differs from dim H"});
      if (v.g_order > 0 && t.g_order() != v.g_order)
        issues.push_back(
            {"surviving " + t.str(), "grouplike count differs from the case order"});
      for (const auto& [d, cnt] : t.entries)
        if (std::find(allowed.begin(), allowed.end(), d) == allowed.end())
          issues.push_back({"surviving " + t.str(),
                            "degree " + std::to_string(d) + " is not admissible"});
      if (v.profile.regime == profile::Regime::Small && v.g_order > 0 &&
          !profile::screen_one(v.profile, t).passed)
        issues.push_back({"surviving " + t.str(), "type does not pass re-screening"});
    }
  }

  void dispatch(const TraceStep& s) {
    const bool filter_shape = s.data.count("type") && !s.data.count("quotient") &&
                              !s.data.count("solutions");
    if (s.rule == "no-solution") {
      check_no_solution(s);
    } else if (s.rule == "empty-enumeration") {
      check_empty_enumeration(s);
    } else if (s.rule == "dimension-equation") {
      check_dimension_equation(s);
    } else if (s.rule == "masuoka-p2") {
      check_masuoka(s);
    } else if (s.rule == "two-part-quotient" && s.data.count("quotient")) {
      check_two_part_survivor(s);
    } else if (s.rule == "quotient-semisolvable" ||
               s.rule == "subalgebra-semisolvable") {
      check_quotient_dimension(s);
    } else if (s.rule == "orbit-stabilizer") {
      check_orbit_stabilizer(s);
    } else if (s.rule == "grouplike-normality") {
      check_grouplike_normality(s);
    } else if (s.rule == "semisolvable-or-biproduct") {
      check_dichotomy(s);
    } else if (s.rule == "coideal-obstruction") {
      check_coideal_obstruction(s);
    } else if (s.rule == "nontrivial-grouplike" && !filter_shape) {
      check_nontrivial_grouplike(s);
    } else if (s.rule == "dual-group-algebra") {
      check_dual_group_algebra(s);
    } else if (s.rule == "p-part-quotient" && !filter_shape) {
      check_candidates(s);
    } else if (s.rule == "stabilizer-residual" && !filter_shape) {
      check_stabilizer_residual(s);
    } else if (filter_shape) {
      check_filter_exclusion(s);
    }
  }
};

}  // namespace

ReplayResult replay_case(const verdict::CaseVerdict& v, i64 fusion_budget) {
  Replayer r{v, fusion_budget, {}, false};
  r.run();
  return {std::move(r.issues)};
}

}  // namespace hopfcheck::verify
