#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hopfcheck/errors.hpp"
#include "hopfcheck/rules.hpp"
#include "hopfcheck/verdict.hpp"

using namespace hopfcheck;
using verdict::CaseVerdict;
using verdict::Outcome;
using profile::AlgebraType;

namespace {

bool contains(const std::string& text, const std::string& sub) {
  return text.find(sub) != std::string::npos;
}

bool has_step(const CaseVerdict& v, const std::string& rule) {
  return std::any_of(v.trace.steps.begin(), v.trace.steps.end(),
                     [&](const auto& s) { return s.rule == rule; });
}

std::vector<trace::TraceStep> steps_of(const CaseVerdict& v, const std::string& rule) {
  std::vector<trace::TraceStep> out;
  for (const auto& s : v.trace.steps)
    if (s.rule == rule) out.push_back(s);
  return out;
}

const CaseVerdict& at_g(const std::vector<CaseVerdict>& vs, arith::i64 g) {
  for (const auto& v : vs)
    if (v.g_order == g) return v;
  FAIL("no case with g_order = " << g);
  return vs.front();
}

std::vector<Outcome> outcomes(const std::vector<CaseVerdict>& vs) {
  std::vector<Outcome> out;
  for (const auto& v : vs) out.push_back(v.outcome);
  return out;
}

const std::vector<Outcome> kAnswerKey{
    Outcome::Impossible,       Outcome::UpperSemisolvable,
    Outcome::SemisolvableOrBiproduct, Outcome::Impossible,
    Outcome::UpperSemisolvable, Outcome::SemisolvableOrBiproduct,
    Outcome::UpperSemisolvable, Outcome::UpperSemisolvable,
    Outcome::DualGroupAlgebra};

}  // namespace

TEST_CASE("outcome names round-trip") {
  for (Outcome o : {Outcome::Impossible, Outcome::UpperSemisolvable,
                    Outcome::LowerSemisolvable, Outcome::SemisolvableOrBiproduct,
                    Outcome::BiproductCandidate, Outcome::DualGroupAlgebra,
                    Outcome::Unsupported})
    CHECK(verdict::outcome_from_name(verdict::outcome_name(o)) == o);
  CHECK(verdict::outcome_name(Outcome::UpperSemisolvable) == "upper-semisolvable");
  CHECK_THROWS_AS(verdict::outcome_from_name("solvable"), Error);
}

TEST_CASE("biproduct condition is a gcd test") {
  CHECK(verdict::biproduct_condition(4, 4, 2));
  CHECK_FALSE(verdict::biproduct_condition(4, 2, 2));
  CHECK(verdict::biproduct_condition(20, 4, 2));
  CHECK(verdict::biproduct_condition(45, 9, 3));
  CHECK_FALSE(verdict::biproduct_condition(45, 3, 3));
  CHECK_THROWS_AS(verdict::biproduct_condition(0, 4, 2), Error);
  CHECK_THROWS_AS(verdict::biproduct_condition(4, -1, 2), Error);
  CHECK_THROWS_AS(verdict::biproduct_condition(4, 4, 6), Error);
}

TEST_CASE("subalgebra semisolvability rule picks out dimension pq^2") {
  const auto pf = profile::make_profile(2, 5);
  CHECK(verdict::subalgebra_semisolvability_rule(50, pf));
  CHECK_FALSE(verdict::subalgebra_semisolvability_rule(25, pf));
  CHECK_FALSE(verdict::subalgebra_semisolvability_rule(1, pf));
  CHECK_FALSE(verdict::subalgebra_semisolvability_rule(100, pf));
  CHECK_THROWS_AS(verdict::subalgebra_semisolvability_rule(30, pf), Error);
  CHECK_THROWS_AS(verdict::subalgebra_semisolvability_rule(0, pf), Error);
  CHECK(verdict::subalgebra_semisolvability_rule(578, profile::make_profile(2, 17)));
}

TEST_CASE("classify_p2q2 input validation") {
  CHECK_THROWS_WITH_AS(verdict::classify_p2q2(4, 17), doctest::Contains("prime"), Error);
  CHECK_THROWS_WITH_AS(verdict::classify_p2q2(2, 15), doctest::Contains("prime"), Error);
  CHECK_THROWS_WITH_AS(verdict::classify_p2q2(5, 5), doctest::Contains("distinct"), Error);
  CHECK_THROWS_WITH_AS(verdict::classify_p2q2(2, 5), doctest::Contains("p^4 < q"), Error);
  CHECK_THROWS_WITH_AS(verdict::classify_p2q2(3, 79), doctest::Contains("p^4 < q"), Error);
  CHECK_NOTHROW(verdict::classify_p2q2(3, 83));
}

TEST_CASE("classify_p2q2(2,17) walks the nine grouplike orders") {
  const auto vs = verdict::classify_p2q2(2, 17);
  REQUIRE(vs.size() == 9);
  const std::vector<arith::i64> gs{1, 2, 4, 17, 34, 68, 289, 578, 1156};
  for (size_t i = 0; i < 9; ++i) {
    CHECK(vs[i].g_order == gs[i]);
    CHECK(vs[i].profile == profile::make_profile(2, 17));
    CHECK_FALSE(vs[i].trace.steps.empty());
  }
  CHECK(outcomes(vs) == kAnswerKey);

  SUBCASE("quotient elimination at g = 2") {
    const auto& v = at_g(vs, 2);
    CHECK(has_step(v, "masuoka-p2"));
    CHECK(has_step(v, "quotient-semisolvable"));
    auto ns = steps_of(v, "no-solution");
    REQUIRE(ns.size() == 3);
    CHECK(ns[0].data.at("offset") == "2");
    CHECK(ns[1].data.at("offset") == "34");
    CHECK(ns[2].data.at("offset") == "68");
    for (const auto& s : ns) {
      CHECK(s.data.at("dim") == "1156");
      CHECK(s.data.at("square") == "289");
    }
  }
  SUBCASE("no grouplike group of order q") {
    const auto& v = at_g(vs, 17);
    CHECK(has_step(v, "p-part-quotient"));
    CHECK(has_step(v, "stabilizer-residual"));
    auto ns = steps_of(v, "no-solution");
    REQUIRE(ns.size() == 3);
    CHECK(ns[0].data.at("dim") == "4");
    CHECK(ns[1].data.at("dim") == "16");
    CHECK(ns[2].data.at("dim") == "1156");
    CHECK(ns[2].data.at("offset") == "17");
    CHECK(ns[2].data.at("square") == "289");
  }
  SUBCASE("grouplike normality at g = q^2") {
    const auto& v = at_g(vs, 289);
    CHECK(v.surviving_types == std::vector<AlgebraType>{AlgebraType{{{1, 289}, {17, 3}}}});
    CHECK(has_step(v, "orbit-stabilizer"));
    CHECK(has_step(v, "grouplike-normality"));
  }
  SUBCASE("dual subalgebra at g = pq^2") {
    CHECK(has_step(at_g(vs, 578), "subalgebra-semisolvable"));
  }
  SUBCASE("whole dimension is a dual group algebra") {
    const auto& v = at_g(vs, 1156);
    CHECK(v.surviving_types == std::vector<AlgebraType>{AlgebraType{{{1, 1156}}}});
    CHECK(has_step(v, "dual-group-algebra"));
  }
  SUBCASE("dichotomy cases carry the biproduct data") {
    for (arith::i64 g : {4, 68}) {
      const auto& v = at_g(vs, g);
      auto ds = steps_of(v, "semisolvable-or-biproduct");
      REQUIRE(ds.size() == 1);
      CHECK(ds[0].data.at("group_order") == "4");
      CHECK(ds[0].data.at("r_dimension") == "289");
      CHECK(v.surviving_types.empty());
    }
  }
}

TEST_CASE("classify_p2q2(5,1283) sharpens the dichotomy when coideals obstruct") {
  const auto vs = verdict::classify_p2q2(5, 1283);
  REQUIRE(vs.size() == 9);
  for (arith::i64 g : {25, 25 * 1283}) {
    const auto& v = at_g(vs, g);
    CHECK(v.outcome == Outcome::LowerSemisolvable);
    CHECK(has_step(v, "semisolvable-or-biproduct"));
    CHECK(has_step(v, "coideal-obstruction"));
    auto ns = steps_of(v, "no-solution");
    REQUIRE(ns.size() == 2);
    CHECK(ns[0].data.at("dim") == std::to_string(1283 * 1283));
    CHECK(ns[0].data.at("offset") == "1");
    CHECK(ns[0].data.at("square") == "5");
    CHECK(ns[1].data.at("offset") == "1283");
  }
  CHECK(at_g(vs, 1).outcome == Outcome::Impossible);
  CHECK(at_g(vs, 5).outcome == Outcome::UpperSemisolvable);
  CHECK(at_g(vs, 1283).outcome == Outcome::Impossible);
}

TEST_CASE("p = 2 dichotomy cases stay unsharpened") {
  const auto vs = verdict::classify_p2q2(2, 17);
  CHECK_FALSE(arith::coideal_obstruction(2, 17).obstructed);
  for (arith::i64 g : {4, 68}) {
    CHECK(at_g(vs, g).outcome == Outcome::SemisolvableOrBiproduct);
    CHECK_FALSE(has_step(at_g(vs, g), "coideal-obstruction"));
  }
}

TEST_CASE("classify_4q2 input validation and delegation") {
  CHECK_THROWS_WITH_AS(verdict::classify_4q2(9), doctest::Contains("prime"), Error);
  CHECK_THROWS_AS(verdict::classify_4q2(2), Error);
  CHECK(verdict::classify_4q2(17) == verdict::classify_p2q2(2, 17));
}

TEST_CASE("classify_4q2(3) cites the dimension-36 classification") {
  const auto vs = verdict::classify_4q2(3);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].g_order == 0);
  CHECK(vs[0].outcome == Outcome::SemisolvableOrBiproduct);
  REQUIRE(vs[0].trace.steps.size() == 1);
  CHECK(vs[0].trace.steps[0].rule == "dim36-classified");
  CHECK(vs[0].surviving_types.empty());
}

TEST_CASE("classify_4q2(5) resolves every grouplike order") {
  const auto vs = verdict::classify_4q2(5);
  REQUIRE(vs.size() == 9);
  const std::vector<arith::i64> gs{1, 2, 4, 5, 10, 20, 25, 50, 100};
  for (size_t i = 0; i < 9; ++i) CHECK(vs[i].g_order == gs[i]);
  CHECK(outcomes(vs) == kAnswerKey);

  SUBCASE("g = 2 keeps one type and refutes the degree-4 branch by search") {
    const auto& v = at_g(vs, 2);
    CHECK(v.surviving_types ==
          std::vector<AlgebraType>{AlgebraType{{{1, 2}, {2, 12}, {5, 2}}}});
    CHECK(has_step(v, "empty-enumeration"));
    auto sb = steps_of(v, "search-branch");
    REQUIRE(sb.size() == 1);
    CHECK(sb[0].data.at("type") == "(1,2;4,3;5,2)");
    CHECK(sb[0].data.at("group") == "C2");
    CHECK(contains(sb[0].detail, "28 nodes"));
    auto tq = steps_of(v, "two-part-quotient");
    REQUIRE(tq.size() == 3);
    CHECK(tq[0].data.at("type") == "(1,2;2,4;4,2;5,2)");
    CHECK(tq[1].data.at("type") == "(1,2;2,8;4,1;5,2)");
    CHECK(tq[2].data.at("quotient") == "50");
  }
  SUBCASE("g = q dies by empty pinned enumeration") {
    const auto& v = at_g(vs, 5);
    CHECK(v.surviving_types.empty());
    auto ee = steps_of(v, "empty-enumeration");
    REQUIRE(ee.size() == 1);
    CHECK(ee[0].data.at("pins") == "2=0");
    CHECK_FALSE(has_step(v, "search-branch"));
  }
  SUBCASE("g = 2q survives with the forced type") {
    const auto& v = at_g(vs, 10);
    CHECK(v.surviving_types ==
          std::vector<AlgebraType>{AlgebraType{{{1, 10}, {2, 10}, {5, 2}}}});
    auto ee = steps_of(v, "empty-enumeration");
    REQUIRE(ee.size() == 1);
    CHECK(ee[0].data.at("pins") == "2=0");
    CHECK(has_step(v, "quotient-semisolvable"));
  }
  SUBCASE("g = q^2 and g = 2q^2 keep their unique types") {
    CHECK(at_g(vs, 25).surviving_types ==
          std::vector<AlgebraType>{AlgebraType{{{1, 25}, {5, 3}}}});
    CHECK(has_step(at_g(vs, 25), "grouplike-normality"));
    CHECK(at_g(vs, 50).surviving_types ==
          std::vector<AlgebraType>{AlgebraType{{{1, 50}, {5, 2}}}});
    CHECK(has_step(at_g(vs, 50), "subalgebra-semisolvable"));
  }
  SUBCASE("whole dimension keeps only the grouplike type") {
    const auto& v = at_g(vs, 100);
    CHECK(v.surviving_types == std::vector<AlgebraType>{AlgebraType{{{1, 100}}}});
    CHECK(has_step(v, "dimension-equation"));
  }
}

TEST_CASE("classify_4q2(7) matches the answer key") {
  const auto vs = verdict::classify_4q2(7);
  REQUIRE(vs.size() == 9);
  CHECK(outcomes(vs) == kAnswerKey);
  const auto& v2 = at_g(vs, 2);
  auto sb = steps_of(v2, "search-branch");
  REQUIRE(sb.size() == 1);
  CHECK(sb[0].data.at("type") == "(1,2;4,6;7,2)");
  CHECK(contains(sb[0].detail, "734 nodes"));
  CHECK(v2.surviving_types ==
        std::vector<AlgebraType>{AlgebraType{{{1, 2}, {2, 24}, {7, 2}}}});
  CHECK(has_step(at_g(vs, 7), "empty-enumeration"));
}

TEST_CASE("classify_4q2(11) needs the fusion engine twice") {
  const auto vs = verdict::classify_4q2(11);
  REQUIRE(vs.size() == 9);
  CHECK(outcomes(vs) == kAnswerKey);

  SUBCASE("g = 2: the degree-4 branch is refuted at the root") {
    const auto& v = at_g(vs, 2);
    auto sb = steps_of(v, "search-branch");
    REQUIRE(sb.size() == 1);
    CHECK(sb[0].data.at("type") == "(1,2;4,15;11,2)");
    CHECK(contains(sb[0].detail, "refuted before branching"));
    auto orb = steps_of(v, "orbit-stabilizer");
    REQUIRE(orb.size() == 1);
    CHECK(orb[0].data.at("group") == "C2");
    CHECK(v.surviving_types ==
          std::vector<AlgebraType>{AlgebraType{{{1, 2}, {2, 60}, {11, 2}}}});
  }
  SUBCASE("g = q: the last candidate falls to the search over C11") {
    const auto& v = at_g(vs, 11);
    CHECK(v.outcome == Outcome::Impossible);
    CHECK(v.surviving_types.empty());
    auto sb = steps_of(v, "search-branch");
    REQUIRE(sb.size() == 1);
    CHECK(sb[0].data.at("type") == "(1,11;4,22;11,1)");
    CHECK(sb[0].data.at("group") == "C11");
    CHECK(contains(sb[0].detail, "12 nodes"));
    CHECK_FALSE(has_step(v, "empty-enumeration"));
  }
}

TEST_CASE("classify_4q2(13) matches the answer key") {
  const auto vs = verdict::classify_4q2(13);
  REQUIRE(vs.size() == 9);
  CHECK(outcomes(vs) == kAnswerKey);
  const auto& v2 = at_g(vs, 2);
  CHECK_FALSE(has_step(v2, "search-branch"));
  auto sr = steps_of(v2, "stabilizer-residual");
  REQUIRE(sr.size() == 1);
  CHECK(sr[0].data.at("type") == "(1,2;4,21;13,2)");
  CHECK(v2.surviving_types ==
        std::vector<AlgebraType>{AlgebraType{{{1, 2}, {2, 84}, {13, 2}}}});
  CHECK(has_step(at_g(vs, 13), "empty-enumeration"));
}

TEST_CASE("every emitted step cites the rule catalog") {
  for (const auto& vs : {verdict::classify_4q2(5), verdict::classify_p2q2(2, 17)}) {
    for (const auto& v : vs) {
      for (const auto& s : v.trace.steps) {
        REQUIRE(rules::has_rule(s.rule));
        CHECK(s.citation == rules::rule(s.rule).citation);
      }
      CHECK(v.outcome != Outcome::BiproductCandidate);
      CHECK(v.outcome != Outcome::Unsupported);
    }
  }
}

TEST_CASE("classification is deterministic") {
  CHECK(verdict::classify_4q2(5) == verdict::classify_4q2(5));
  CHECK(verdict::classify_p2q2(2, 19) == verdict::classify_p2q2(2, 19));
}
