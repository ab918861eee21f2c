#include "hopfcheck/verdict.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hopfcheck/errors.hpp"
#include "hopfcheck/fusion.hpp"
#include "hopfcheck/group.hpp"

namespace hopfcheck::verdict {

namespace {

using profile::AlgebraType;
using profile::DimensionProfile;
using profile::FilterReport;
using trace::ProofTrace;

std::string num(i64 v) { return std::to_string(v); }

std::string join_i64(const std::vector<i64>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += num(v[i]);
  }
  return s;
}

void push(ProofTrace& tr, const std::string& rule, std::string detail,
          std::map<std::string, std::string> data = {}) {
  tr.steps.push_back(trace::make_step(rule, std::move(detail), std::move(data)));
}

/** Certifies dim != offset + c*square for c >= 0 and records the certificate. */
void no_solution_step(ProofTrace& tr, i64 dim, i64 offset, i64 square,
                      const std::string& context) {
  if (!arith::no_solution_check(dim, offset, square))
    fail("InternalError", num(dim) + " = " + num(offset) + " + c*" + num(square) +
                              " unexpectedly has a solution");
  push(tr, "no-solution",
       context + ": " + num(dim) + " = " + num(offset) + " + c*" + num(square) +
           " has no nonnegative integer solution",
       {{"dim", num(dim)}, {"offset", num(offset)}, {"square", num(square)}});
}

std::vector<i64> higher_degrees(const DimensionProfile& pf) {
  return {pf.p, pf.p * pf.p, pf.q};
}

/** Certifies that the dimension equation has no solution under the pins. */
void empty_enumeration_step(ProofTrace& tr, const DimensionProfile& pf, i64 g,
                            const std::map<i64, i64>& pins, const std::string& context) {
  const auto degrees = higher_degrees(pf);
  if (!arith::enumerate_dimension_solutions(pf.dim(), g, degrees, pins).empty())
    fail("InternalError", "expected an empty enumeration at g = " + num(g));
  std::string pin_str;
  for (auto& [d, n] : pins) {
    if (!pin_str.empty()) pin_str += ",";
    pin_str += num(d) + "=" + num(n);
  }
  push(tr, "empty-enumeration", context,
       {{"dim", num(pf.dim())},
        {"g", num(g)},
        {"degrees", join_i64(degrees)},
        {"pins", pin_str}});
}

/** One certificate step per screened-out candidate type. */
void filter_failure_steps(ProofTrace& tr, const std::vector<FilterReport>& reports) {
  for (const auto& r : reports) {
    if (r.passed) continue;
    const auto& f = r.failures.front();
    push(tr, f.rule, "type " + r.type.str() + " is excluded: " + f.detail,
         {{"type", r.type.str()}});
  }
}

struct FusionElimination {
  bool refuted = true;
  bool budget_hit = false;
  ProofTrace steps;
};

/** Runs the table search over every abelian group class of the type's grouplike order. */
FusionElimination eliminate_by_fusion(const AlgebraType& t) {
  FusionElimination out;
  for (const auto& g : grp::abelian_groups_of_order(t.g_order())) {
    auto res = fusion::search_consistent_table(t, g);
    for (auto& s : res.trace.steps) out.steps.steps.push_back(std::move(s));
    if (res.outcome == fusion::Outcome::BudgetExceeded) {
      out.refuted = false;
      out.budget_hit = true;
    } else if (res.outcome == fusion::Outcome::Feasible) {
      out.refuted = false;
    }
  }
  return out;
}

CaseVerdict base_case(const DimensionProfile& pf, i64 g, Outcome o) {
  CaseVerdict v;
  v.profile = pf;
  v.g_order = g;
  v.outcome = o;
  return v;
}

/** Appends fusion steps; downgrades the verdict if the type was not refuted. */
void apply_fusion_elimination(CaseVerdict& v, const AlgebraType& t) {
  auto elim = eliminate_by_fusion(t);
  for (auto& s : elim.steps.steps) v.trace.steps.push_back(std::move(s));
  if (elim.refuted) return;
  v.outcome = Outcome::Unsupported;
  push(v.trace, "search-branch",
       elim.budget_hit
           ? "the node budget ran out before type " + t.str() + " was refuted"
           : "type " + t.str() +
                 " admits a consistent table; the case analysis does not conclude",
       {{"type", t.str()}});
}

CaseVerdict trivial_grouplike_case(const DimensionProfile& pf, bool screen) {
  CaseVerdict v = base_case(pf, 1, Outcome::Impossible);
  if (screen) {
    const auto reports = profile::screen_types(pf, 1);
    for (const auto& r : reports) {
      const bool hit = !r.passed &&
                       std::any_of(r.failures.begin(), r.failures.end(), [](const auto& f) {
                         return f.rule == "nontrivial-grouplike";
                       });
      if (!hit) fail("InternalError", "a grouplike-order-1 type escaped the grouplike filter");
    }
    push(v.trace, "nontrivial-grouplike",
         "all " + num(reports.size()) +
             " candidate types at |G(H*)| = 1 fail the nontrivial-grouplike filter",
         {{"g", "1"}, {"solutions", num(reports.size())}});
  } else {
    push(v.trace, "nontrivial-grouplike",
         "|G(H*)| = 1 is impossible at dimension " + num(pf.dim()), {{"g", "1"}});
  }
  return v;
}

/** g = p or pq: the degree {1, p, p^2} quotient survives only at dimension pq^2. */
CaseVerdict upper_by_quotient_elimination(const DimensionProfile& pf, i64 g) {
  const i64 p = pf.p, q = pf.q, dim = pf.dim();
  const i64 p2 = p * p, p4 = p2 * p2;
  CaseVerdict v = base_case(pf, g, Outcome::UpperSemisolvable);
  push(v.trace, "dimension-equation",
       "if c = 0 then " + num(p2) + " divides every term of " + num(dim) + " = " + num(g) +
           " + a*" + num(p2) + " + b*" + num(p4) + " except |G(H*)| = " + num(g) +
           "; hence c >= 1",
       {{"g", num(g)}});
  std::vector<i64> cands;
  for (i64 d : arith::divisors(dim))
    if (d % p == 0 && d < dim) cands.push_back(d);
  {
    std::vector<i64> expect{p, p2, p * q, p2 * q, p * q * q};
    std::sort(expect.begin(), expect.end());
    if (cands != expect) fail("InternalError", "unexpected quotient candidate set");
  }
  push(v.trace, "p-part-quotient",
       "the characters of degree 1, " + num(p) + " and " + num(p2) +
           " span a quotient Hopf algebra of dimension " + num(g) + " + a*" + num(p2) +
           " + b*" + num(p4) + ", a proper divisor of " + num(dim) +
           " that is a multiple of " + num(p) + "; candidates: " + join_i64(cands),
       {{"g", num(g)}, {"candidates", join_i64(cands)}});
  push(v.trace, "masuoka-p2",
       "quotient dimension " + num(p2) +
           " is excluded: it would embed a grouplike group of order " + num(p2) +
           " into the dual, but " + num(p2) + " does not divide |G(H*)| = " + num(g),
       {{"quotient", num(p2)}, {"g", num(g)}});
  for (i64 d : {p, p * q, p2 * q})
    no_solution_step(v.trace, dim, d, q * q,
                     "quotient dimension " + num(d) + " is excluded");
  push(v.trace, "quotient-semisolvable",
       "the only surviving quotient dimension is " + num(p * q * q) +
           " = pq^2; its dual is a Hopf subalgebra of the dual of index " + num(p) +
           ", so H is upper semisolvable",
       {{"dimension", num(p * q * q)}});
  return v;
}

/** g = q: the {1, p, p^2} quotient forces a = b = 0 and then the equation fails. */
CaseVerdict impossible_prime_grouplike(const DimensionProfile& pf) {
  const i64 p = pf.p, q = pf.q, dim = pf.dim();
  const i64 p2 = p * p, p4 = p2 * p2;
  CaseVerdict v = base_case(pf, q, Outcome::Impossible);
  push(v.trace, "p-part-quotient",
       "the characters of degree 1, " + num(p) + " and " + num(p2) +
           " span a quotient Hopf algebra of dimension " + num(q) + " + a*" + num(p2) +
           " + b*" + num(p4),
       {{"g", num(q)}});
  push(v.trace, "stabilizer-residual",
       "gcd(" + num(p2) + ", " + num(q) + ") = 1, so inside the quotient a character of degree " +
           num(p) + " or " + num(p2) +
           " has trivial stabilizer and its self-product decomposes over degrees " + num(p) +
           " and " + num(p2) + " beyond the unit",
       {{"g", num(q)}});
  no_solution_step(v.trace, p2, 1, p, "a > 0 would force " + num(p2) + " = 1 + m*" + num(p));
  no_solution_step(v.trace, p4, 1, p, "b > 0 would force " + num(p4) + " = 1 + m*" + num(p));
  no_solution_step(v.trace, dim, q, q * q,
                   "with a = b = 0 the dimension equation would read " + num(dim) + " = " +
                       num(q) + " + c*" + num(q * q));
  return v;
}

/** Orbit collapse on the degree-q class and normality of the grouplike algebra. */
void grouplike_normality_steps(ProofTrace& tr, const DimensionProfile& pf, i64 g,
                               i64 class_size) {
  const i64 q = pf.q;
  std::vector<i64> lengths;
  for (i64 l : arith::divisors(g))
    if (l <= class_size) lengths.push_back(l);
  if (lengths != std::vector<i64>{1})
    fail("InternalError", "orbit lengths other than 1 fit the degree-q class");
  push(tr, "orbit-stabilizer",
       "the grouplike group of order " + num(g) + " acts on the " + num(class_size) +
           " characters of degree " + num(q) + "; orbit lengths divide " + num(g) + " and " +
           num(class_size) + " < " + num(q) +
           ", so every orbit is a singleton and every stabilizer is the full group",
       {{"g", num(g)}, {"class_size", num(class_size)}});
  push(tr, "grouplike-normality",
       "each degree-" + num(q) +
           " simple subcoalgebra of the dual is stable under grouplike multiplication on "
           "both sides; the grouplike algebra is normal in the Hopf subalgebra they "
           "generate, which is the whole dual by dimension count, and the associated "
           "quotient is trivial, so the dual is lower semisolvable and H is upper "
           "semisolvable",
       {{"g", num(g)}});
}

/** g = q^2 in the general regime. */
CaseVerdict upper_by_grouplike_normality(const DimensionProfile& pf) {
  const i64 p = pf.p, q = pf.q, dim = pf.dim();
  const i64 p2 = p * p, p4 = p2 * p2, q2 = q * q;
  CaseVerdict v = base_case(pf, q2, Outcome::UpperSemisolvable);
  push(v.trace, "stabilizer-residual",
       "gcd(" + num(p2) + ", " + num(q2) +
           ") = 1, so characters of degree " + num(p) + " or " + num(p2) +
           " would have trivial stabilizers and self-products over degrees " + num(p) +
           " and " + num(p2) + " beyond the unit",
       {{"g", num(q2)}});
  no_solution_step(v.trace, p2, 1, p, "a > 0 would force " + num(p2) + " = 1 + m*" + num(p));
  no_solution_step(v.trace, p4, 1, p, "b > 0 would force " + num(p4) + " = 1 + m*" + num(p));
  if (dim - q2 != (p2 - 1) * q2) fail("InternalError", "bad degree-q count at g = q^2");
  AlgebraType t{{{1, q2}, {q, p2 - 1}}};
  push(v.trace, "dimension-equation",
       num(dim) + " = " + num(q2) + " + c*" + num(q2) + " forces c = " + num(p2 - 1) +
           "; the algebra has type " + t.str(),
       {{"g", num(q2)}, {"type", t.str()}});
  grouplike_normality_steps(v.trace, pf, q2, p2 - 1);
  v.surviving_types.push_back(t);
  return v;
}

/** g = pq^2: the dual's grouplike algebra is itself an index-p Hopf subalgebra. */
void dual_subalgebra_steps(ProofTrace& tr, const DimensionProfile& pf, i64 g) {
  if (!subalgebra_semisolvability_rule(g, pf))
    fail("InternalError", "expected the pq^2 subalgebra dimension, got " + num(g));
  push(tr, "subalgebra-semisolvable",
       "the dual contains its grouplike group algebra, a Hopf subalgebra of dimension " +
           num(g) + " = pq^2 and index " + num(pf.p) +
           "; the dual is lower semisolvable, hence H is upper semisolvable",
       {{"dimension", num(g)}});
}

CaseVerdict upper_by_dual_subalgebra(const DimensionProfile& pf, i64 g) {
  CaseVerdict v = base_case(pf, g, Outcome::UpperSemisolvable);
  dual_subalgebra_steps(v.trace, pf, g);
  return v;
}

/** g = p^2 or p^2 q: semisolvable or biproduct, sharpened when the coideal count obstructs. */
CaseVerdict dichotomy_case(const DimensionProfile& pf, i64 g) {
  const i64 p = pf.p, q = pf.q;
  CaseVerdict v = base_case(pf, g, Outcome::SemisolvableOrBiproduct);
  push(v.trace, "semisolvable-or-biproduct",
       "either a Hopf subalgebra of dimension " + num(p * q * q) +
           " provides a normal chain, or gcd(|G(H)|, |G(H*)|) = " + num(p * p) +
           " and H is a biproduct R # kG with |G| = " + num(p * p) + " and dim R = " +
           num(q * q),
       {{"g", num(g)}, {"group_order", num(p * p)}, {"r_dimension", num(q * q)}});
  const auto ob = arith::coideal_obstruction(p, q);
  if (ob.obstructed) {
    no_solution_step(v.trace, q * q, 1, p,
                     "a coinvariant space of dimension " + num(q * q) +
                         " whose only 1-dimensional coideal is the unit line");
    no_solution_step(v.trace, q * q, q, p,
                     "a coinvariant space of dimension " + num(q * q) +
                         " containing a grouplike span of dimension " + num(q));
    push(v.trace, "coideal-obstruction",
         num(p) + " divides neither " + num(q * q - 1) + " nor " + num(q * q - q) +
             ", so the biproduct branch is impossible and the Hopf-subalgebra chain "
             "remains: H is lower semisolvable",
         {{"p", num(p)}, {"q", num(q)}});
    v.outcome = Outcome::LowerSemisolvable;
  }
  return v;
}

CaseVerdict dual_group_algebra_case(const DimensionProfile& pf, bool screen) {
  const i64 dim = pf.dim();
  CaseVerdict v = base_case(pf, dim, Outcome::DualGroupAlgebra);
  AlgebraType t{{{1, dim}}};
  if (screen) {
    const auto reports = profile::screen_types(pf, dim);
    if (reports.size() != 1 || !reports.front().passed || !(reports.front().type == t))
      fail("InternalError", "expected the all-grouplike type as the unique solution");
    push(v.trace, "dimension-equation",
         "at |G(H*)| = " + num(dim) + " the dimension equation admits only a = b = c = 0",
         {{"g", num(dim)}, {"solutions", "1"}});
  }
  push(v.trace, "dual-group-algebra",
       "|G(H*)| = dim H = " + num(dim) +
           ", so the dual is spanned by grouplikes and H is a dual group algebra",
       {{"g", num(dim)}});
  v.surviving_types.push_back(t);
  return v;
}

/** g = 2 at dimension 4q^2. */
CaseVerdict small_case_two(const DimensionProfile& pf) {
  const i64 q = pf.q, dim = pf.dim();
  CaseVerdict v = base_case(pf, 2, Outcome::UpperSemisolvable);
  const auto reports = profile::screen_types(pf, 2);
  push(v.trace, "dimension-equation",
       num(dim) + " = 2 + 4a + 16b + c*" + num(q * q) + " admits " + num(reports.size()) +
           " candidate types",
       {{"g", "2"}, {"solutions", num(reports.size())}});
  empty_enumeration_step(v.trace, pf, 2, {{q, 0}},
                         "c = 0 would require 2(q^2 - a - 4b) = 1, so c is 1, 2 or 3");
  filter_failure_steps(v.trace, reports);
  for (const auto& r : reports) {
    if (!r.passed) continue;
    const AlgebraType& t = r.type;
    if (t.count_at(2) > 0) {
      const i64 quot = 2 + 4 * t.count_at(2);
      if (quot != 2 * q * q)
        fail("InternalError", "unexpected degree-2 quotient dimension " + num(quot));
      push(v.trace, "two-part-quotient",
           "for type " + t.str() +
               " the grouplikes and degree-2 characters span a quotient of dimension "
               "2 + 4a = " + num(quot) + " = 2q^2",
           {{"type", t.str()}, {"quotient", num(quot)}});
      push(v.trace, "quotient-semisolvable",
           "a quotient Hopf algebra of dimension " + num(quot) +
               " = pq^2 makes H upper semisolvable",
           {{"dimension", num(quot)}});
      v.surviving_types.push_back(t);
    } else {
      apply_fusion_elimination(v, t);
    }
  }
  return v;
}

/** g = q at dimension 4q^2. */
CaseVerdict small_case_q(const DimensionProfile& pf) {
  const i64 q = pf.q, dim = pf.dim();
  CaseVerdict v = base_case(pf, q, Outcome::Impossible);
  const auto reports = profile::screen_types(pf, q);
  push(v.trace, "dimension-equation",
       num(dim) + " = " + num(q) + " + 4a + 16b + c*" + num(q * q) + " admits " +
           num(reports.size()) + " candidate types",
       {{"g", num(q)}, {"solutions", num(reports.size())}});
  push(v.trace, "stabilizer-residual",
       "gcd(4, " + num(q) +
           ") = 1: a degree-2 character would have trivial stabilizer and residual 3, "
           "which no combination of degrees 2, 4 and " + num(q) + " attains; hence a = 0",
       {{"degree", "2"}, {"residual", "3"}});
  filter_failure_steps(v.trace, reports);
  std::vector<AlgebraType> passing;
  for (const auto& r : reports) {
    if (!r.passed) continue;
    if (r.type.count_at(2) != 0)
      fail("InternalError", "a type with a > 0 survived the stabilizer filter at g = q");
    passing.push_back(r.type);
  }
  if (passing.empty()) {
    if (arith::enumerate_dimension_solutions(dim, q, higher_degrees(pf), {{2, 0}}).empty())
      empty_enumeration_step(v.trace, pf, q, {{2, 0}},
                             "with a = 0 the equation " + num(dim) + " = " + num(q) +
                                 " + 16b + c*" + num(q * q) + " has no solution");
  } else {
    for (const auto& t : passing) apply_fusion_elimination(v, t);
  }
  return v;
}

/** g = 2q at dimension 4q^2. */
CaseVerdict small_case_two_q(const DimensionProfile& pf) {
  const i64 q = pf.q, dim = pf.dim(), g = 2 * q;
  CaseVerdict v = base_case(pf, g, Outcome::UpperSemisolvable);
  const auto reports = profile::screen_types(pf, g);
  push(v.trace, "dimension-equation",
       num(dim) + " = " + num(g) + " + 4a + 16b + c*" + num(q * q) + " admits " +
           num(reports.size()) + " candidate types",
       {{"g", num(g)}, {"solutions", num(reports.size())}});
  empty_enumeration_step(v.trace, pf, g, {{2, 0}},
                         "a = 0 would require " + num(dim) + " = " + num(g) + " + 16b + c*" +
                             num(q * q) + ", which has no solution");
  filter_failure_steps(v.trace, reports);
  for (const auto& r : reports) {
    if (!r.passed) continue;
    const AlgebraType& t = r.type;
    if (t.count_at(2) <= 0)
      fail("InternalError", "an a = 0 type survived screening at g = 2q");
    const i64 quot = g + 4 * t.count_at(2);
    if (quot != 2 * q * q)
      fail("InternalError", "unexpected degree-2 quotient dimension " + num(quot));
    push(v.trace, "two-part-quotient",
         "for type " + t.str() +
             " the grouplikes and degree-2 characters span a quotient of dimension " +
             num(g) + " + 4a = " + num(quot) + " = 2q^2",
         {{"type", t.str()}, {"quotient", num(quot)}});
    push(v.trace, "quotient-semisolvable",
         "a quotient Hopf algebra of dimension " + num(quot) +
             " = pq^2 makes H upper semisolvable",
         {{"dimension", num(quot)}});
    v.surviving_types.push_back(t);
  }
  return v;
}

/** g = q^2 at dimension 4q^2. */
CaseVerdict small_case_q_squared(const DimensionProfile& pf) {
  const i64 q = pf.q, dim = pf.dim(), g = q * q;
  CaseVerdict v = base_case(pf, g, Outcome::UpperSemisolvable);
  const auto reports = profile::screen_types(pf, g);
  push(v.trace, "dimension-equation",
       num(dim) + " = " + num(g) + " + 4a + 16b + c*" + num(q * q) + " admits " +
           num(reports.size()) + " candidate types",
       {{"g", num(g)}, {"solutions", num(reports.size())}});
  filter_failure_steps(v.trace, reports);
  const AlgebraType expected{{{1, g}, {q, 3}}};
  std::vector<AlgebraType> passing;
  for (const auto& r : reports)
    if (r.passed) passing.push_back(r.type);
  if (passing.size() != 1 || !(passing.front() == expected))
    fail("InternalError", "expected " + expected.str() + " as the unique survivor at g = q^2");
  grouplike_normality_steps(v.trace, pf, g, 3);
  v.surviving_types.push_back(expected);
  return v;
}

/** g = 2q^2 at dimension 4q^2. */
CaseVerdict small_case_two_q_squared(const DimensionProfile& pf) {
  const i64 q = pf.q, dim = pf.dim(), g = 2 * q * q;
  CaseVerdict v = base_case(pf, g, Outcome::UpperSemisolvable);
  const auto reports = profile::screen_types(pf, g);
  push(v.trace, "dimension-equation",
       num(dim) + " = " + num(g) + " + 4a + 16b + c*" + num(q * q) + " admits " +
           num(reports.size()) + " candidate types",
       {{"g", num(g)}, {"solutions", num(reports.size())}});
  filter_failure_steps(v.trace, reports);
  for (const auto& r : reports)
    if (r.passed) v.surviving_types.push_back(r.type);
  const AlgebraType expected{{{1, g}, {q, 2}}};
  if (v.surviving_types.size() != 1 || !(v.surviving_types.front() == expected))
    fail("InternalError", "expected " + expected.str() + " as the unique survivor at g = 2q^2");
  dual_subalgebra_steps(v.trace, pf, g);
  return v;
}

}  // namespace

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Impossible: return "impossible";
    case Outcome::UpperSemisolvable: return "upper-semisolvable";
    case Outcome::LowerSemisolvable: return "lower-semisolvable";
    case Outcome::SemisolvableOrBiproduct: return "semisolvable-or-biproduct";
    case Outcome::BiproductCandidate: return "biproduct-candidate";
    case Outcome::DualGroupAlgebra: return "dual-group-algebra";
    case Outcome::Unsupported: return "unsupported";
  }
  fail("InvalidArgument", "unknown outcome value");
}

Outcome outcome_from_name(const std::string& name) {
  for (Outcome o : {Outcome::Impossible, Outcome::UpperSemisolvable,
                    Outcome::LowerSemisolvable, Outcome::SemisolvableOrBiproduct,
                    Outcome::BiproductCandidate, Outcome::DualGroupAlgebra,
                    Outcome::Unsupported})
    if (outcome_name(o) == name) return o;
  fail("ParseError", "unknown outcome label '" + name + "'");
}

std::vector<CaseVerdict> classify_p2q2(i64 p, i64 q) {
  if (!arith::is_prime(p) || !arith::is_prime(q))
    fail("NotPrime", "p and q must both be prime, got p=" + num(p) + " q=" + num(q));
  if (p == q) fail("EqualPrimes", "p and q must be distinct");
  if (static_cast<__int128>(p) * p * p * p >= q)
    fail("HypothesisViolation",
         "p^4 < q fails for p=" + num(p) + " q=" + num(q) +
             (p == 2 ? "; use classify_4q2 for dimension 4q^2" : ""));
  if (q > 100000) fail("Unsupported", "q is too large for the classifier");
  const auto pf = profile::make_profile(p, q);
  const i64 dim = pf.dim();
  std::vector<CaseVerdict> out;
  for (i64 g : arith::divisors(dim)) {
    if (g == 1)
      out.push_back(trivial_grouplike_case(pf, false));
    else if (g == p || g == p * q)
      out.push_back(upper_by_quotient_elimination(pf, g));
    else if (g == p * p || g == p * p * q)
      out.push_back(dichotomy_case(pf, g));
    else if (g == q)
      out.push_back(impossible_prime_grouplike(pf));
    else if (g == q * q)
      out.push_back(upper_by_grouplike_normality(pf));
    else if (g == p * q * q)
      out.push_back(upper_by_dual_subalgebra(pf, g));
    else
      out.push_back(dual_group_algebra_case(pf, false));
  }
  return out;
}

std::vector<CaseVerdict> classify_4q2(i64 q) {
  if (!arith::is_prime(q)) fail("NotPrime", "q must be prime, got q=" + num(q));
  if (q == 2) fail("EqualPrimes", "dimension 16 has p = q = 2, outside both regimes");
  if (q > 13) return classify_p2q2(2, q);
  if (q == 3) {
    CaseVerdict v = base_case(profile::make_profile(2, 3), 0,
                              Outcome::SemisolvableOrBiproduct);
    push(v.trace, "dim36-classified",
         "dimension 36 is settled by the imported classification: every such H is upper "
         "or lower semisolvable, so the dichotomy collapses to the semisolvable branch "
         "for every grouplike order; no computation is performed");
    return {v};
  }
  const auto pf = profile::make_profile(2, q);
  std::vector<CaseVerdict> out;
  for (i64 g : arith::divisors(pf.dim())) {
    if (g == 1)
      out.push_back(trivial_grouplike_case(pf, true));
    else if (g == 2)
      out.push_back(small_case_two(pf));
    else if (g == 4 || g == 4 * q)
      out.push_back(dichotomy_case(pf, g));
    else if (g == q)
      out.push_back(small_case_q(pf));
    else if (g == 2 * q)
      out.push_back(small_case_two_q(pf));
    else if (g == q * q)
      out.push_back(small_case_q_squared(pf));
    else if (g == 2 * q * q)
      out.push_back(small_case_two_q_squared(pf));
    else
      out.push_back(dual_group_algebra_case(pf, true));
  }
  return out;
}

bool biproduct_condition(i64 g_h, i64 g_hdual, i64 p) {
  if (g_h < 1 || g_hdual < 1) fail("InvalidArgument", "grouplike orders must be positive");
  if (!arith::is_prime(p)) fail("NotPrime", "p must be prime, got p=" + num(p));
  return arith::gcd(g_h, g_hdual) == p * p;
}

bool subalgebra_semisolvability_rule(i64 dim_k, const profile::DimensionProfile& profile) {
  if (dim_k < 1) fail("InvalidArgument", "the subalgebra dimension must be positive");
  if (profile.dim() % dim_k != 0)
    fail("DivisibilityViolation",
         num(dim_k) + " does not divide the ambient dimension " + num(profile.dim()));
  return dim_k == profile.p * profile.q * profile.q;
}

}  // namespace hopfcheck::verdict
