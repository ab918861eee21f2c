#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcheck/errors.hpp"
#include "hopfcheck/report.hpp"

using namespace hopfcheck;

namespace {

report::Report sample_classify_report(bool with_timings) {
  report::Report r;
  r.config.command = "classify";
  r.config.params = {{"p", "2"}, {"q", "5"}, {"format", "json"}};
  double ms = 0.25;
  for (const auto& v : verdict::classify_4q2(5)) {
    auto c = report::verdict_case(v);
    if (with_timings) c.wall_ms = (ms += 0.25);
    r.cases.push_back(std::move(c));
  }
  return r;
}

report::Report sample_mixed_report() {
  report::Report r;
  r.config.command = "eliminate";
  r.config.params = {{"type", "(1,2;4,3;5,2)"}, {"group", "C2"}};
  const auto pf = profile::make_profile(2, 5);
  for (const auto& fr : profile::screen_types(pf, 2))
    r.cases.push_back(report::screen_case(fr));
  const auto t = profile::AlgebraType::parse("(1,2;4,3;5,2)");
  const auto res = fusion::search_consistent_table(t, grp::abelian_groups_of_order(2)[0]);
  report::FusionRun run{t, "C2", res.outcome, res.stats, res.trace};
  r.cases.push_back(report::fusion_case(run));
  r.cases.push_back(report::criterion_case({5, "fusion-elimination", true, "all refuted"}));
  r.findings.push_back({"demo", "not a real divergence"});
  return r;
}

}  // namespace

TEST_CASE("fusion outcome labels round-trip") {
  for (auto o : {fusion::Outcome::Feasible, fusion::Outcome::Infeasible,
                 fusion::Outcome::BudgetExceeded})
    CHECK(report::fusion_outcome_from_label(report::fusion_outcome_label(o)) == o);
  CHECK_THROWS_AS(report::fusion_outcome_from_label("unknown"), Error);
}

TEST_CASE("JSON round-trips field for field") {
  for (const auto& r : {sample_classify_report(true), sample_classify_report(false),
                        sample_mixed_report()}) {
    const auto text = report::to_json(r);
    const auto back = report::from_json(text);
    CHECK(back == r);
    CHECK(report::to_json(back) == text);
  }
}

TEST_CASE("JSON layout is the documented schema") {
  const auto r = sample_classify_report(false);
  const auto text = report::to_json(r);
  CHECK(text.find("\"version\": \"0.1.0\"") != std::string::npos);
  CHECK(text.find("\"command\": \"classify\"") != std::string::npos);
  const auto v = text.find("\"version\"");
  const auto cfg = text.find("\"config\"");
  const auto cases = text.find("\"cases\"");
  const auto findings = text.find("\"findings\"");
  REQUIRE(v != std::string::npos);
  CHECK(v < cfg);
  CHECK(cfg < cases);
  CHECK(cases < findings);
  CHECK(text.find("\"rule\"") < text.find("\"citation\""));
  CHECK(text.find("\"wall_ms\"") == std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("serialization is deterministic and timing-free reports are stable") {
  const auto a = report::to_json(sample_classify_report(false));
  const auto b = report::to_json(sample_classify_report(false));
  CHECK(a == b);
  const auto ma = report::to_markdown(sample_classify_report(false));
  const auto mb = report::to_markdown(sample_classify_report(false));
  CHECK(ma == mb);
}

TEST_CASE("timings appear only when recorded") {
  const auto with = report::to_json(sample_classify_report(true));
  CHECK(with.find("\"wall_ms\"") != std::string::npos);
  const auto md = report::to_markdown(sample_classify_report(true));
  CHECK(md.find(" ms)") != std::string::npos);
}

TEST_CASE("markdown carries the same verdict set as the JSON") {
  const auto r = sample_classify_report(false);
  const auto md = report::to_markdown(r);
  for (const auto& c : r.cases) {
    REQUIRE(c.verdict.has_value());
    const auto row = "| " + c.id + " | verdict | " +
                     verdict::outcome_name(c.verdict->outcome) + " |";
    CHECK(md.find(row) != std::string::npos);
  }
  CHECK(md.find("## Findings") != std::string::npos);
  CHECK(md.find("None.") != std::string::npos);
}

TEST_CASE("markdown renders mixed case kinds") {
  const auto md = report::to_markdown(sample_mixed_report());
  CHECK(md.find("| fusion |") != std::string::npos);
  CHECK(md.find("| screen |") != std::string::npos);
  CHECK(md.find("| criterion-5 | criterion | pass |") != std::string::npos);
  CHECK(md.find("- demo: not a real divergence") != std::string::npos);
}

TEST_CASE("whole-dimension verdicts get a stable id") {
  const auto vs = verdict::classify_4q2(3);
  REQUIRE(vs.size() == 1);
  CHECK(report::verdict_case(vs[0]).id == "whole-dimension");
  report::Report r;
  r.config.command = "classify";
  r.cases.push_back(report::verdict_case(vs[0]));
  CHECK(report::from_json(report::to_json(r)) == r);
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(report::from_json("{"), Error);
  CHECK_THROWS_AS(report::from_json("{}"), Error);
  CHECK_THROWS_AS(report::from_json("{\"version\":\"0.1.0\"}"), Error);
  try {
    report::from_json("[1,2]");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == "ParseError");
  }
}
