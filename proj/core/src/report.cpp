#include "hopfcheck/report.hpp"

#include <cstdio>

#include <json.hpp>

#include "hopfcheck/errors.hpp"

namespace hopfcheck::report {

namespace {

using nlohmann::ordered_json;

ordered_json step_json(const trace::TraceStep& s) {
  ordered_json j{{"rule", s.rule}, {"citation", s.citation}, {"detail", s.detail}};
  if (!s.data.empty()) {
    ordered_json d = ordered_json::object();
    for (const auto& [k, v] : s.data) d[k] = v;
    j["data"] = std::move(d);
  }
  return j;
}

ordered_json trace_json(const trace::ProofTrace& tr) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : tr.steps) arr.push_back(step_json(s));
  return arr;
}

trace::ProofTrace trace_from(const ordered_json& arr) {
  trace::ProofTrace tr;
  for (const auto& j : arr) {
    trace::TraceStep s;
    s.rule = j.at("rule").get<std::string>();
    s.citation = j.at("citation").get<std::string>();
    s.detail = j.at("detail").get<std::string>();
    if (j.contains("data"))
      for (const auto& [k, v] : j.at("data").items()) s.data[k] = v.get<std::string>();
    tr.steps.push_back(std::move(s));
  }
  return tr;
}

ordered_json verdict_json(const verdict::CaseVerdict& v) {
  ordered_json types = ordered_json::array();
  for (const auto& t : v.surviving_types) types.push_back(t.str());
  return ordered_json{{"p", v.profile.p},
                      {"q", v.profile.q},
                      {"g_order", v.g_order},
                      {"outcome", verdict::outcome_name(v.outcome)},
                      {"surviving_types", std::move(types)},
                      {"trace", trace_json(v.trace)}};
}

verdict::CaseVerdict verdict_from(const ordered_json& j) {
  verdict::CaseVerdict v;
  v.profile = profile::make_profile(j.at("p").get<arith::i64>(), j.at("q").get<arith::i64>());
  v.g_order = j.at("g_order").get<arith::i64>();
  v.outcome = verdict::outcome_from_name(j.at("outcome").get<std::string>());
  for (const auto& t : j.at("surviving_types"))
    v.surviving_types.push_back(profile::AlgebraType::parse(t.get<std::string>()));
  v.trace = trace_from(j.at("trace"));
  return v;
}

ordered_json screen_json(const profile::FilterReport& r) {
  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures)
    failures.push_back(
        ordered_json{{"rule", f.rule}, {"citation", f.citation}, {"detail", f.detail}});
  ordered_json flags = ordered_json::array();
  for (const auto& fl : r.flags) flags.push_back(fl);
  return ordered_json{{"type", r.type.str()},
                      {"passed", r.passed},
                      {"failures", std::move(failures)},
                      {"flags", std::move(flags)}};
}

profile::FilterReport screen_from(const ordered_json& j) {
  profile::FilterReport r;
  r.type = profile::AlgebraType::parse(j.at("type").get<std::string>());
  r.passed = j.at("passed").get<bool>();
  for (const auto& f : j.at("failures"))
    r.failures.push_back({f.at("rule").get<std::string>(),
                          f.at("citation").get<std::string>(),
                          f.at("detail").get<std::string>()});
  for (const auto& fl : j.at("flags")) r.flags.push_back(fl.get<std::string>());
  return r;
}

ordered_json fusion_json(const FusionRun& run) {
  ordered_json j{{"type", run.type.str()},
                 {"group", run.group},
                 {"outcome", fusion_outcome_label(run.outcome)},
                 {"stats",
                  ordered_json{{"nodes", run.stats.nodes},
                               {"propagations", run.stats.propagations},
                               {"contradictions", run.stats.contradictions},
                               {"max_depth", run.stats.max_depth}}},
                 {"trace", trace_json(run.trace)}};
  if (run.witness) j["witness"] = *run.witness;
  return j;
}

FusionRun fusion_from(const ordered_json& j) {
  FusionRun run;
  run.type = profile::AlgebraType::parse(j.at("type").get<std::string>());
  run.group = j.at("group").get<std::string>();
  run.outcome = fusion_outcome_from_label(j.at("outcome").get<std::string>());
  const auto& st = j.at("stats");
  run.stats.nodes = st.at("nodes").get<arith::i64>();
  run.stats.propagations = st.at("propagations").get<arith::i64>();
  run.stats.contradictions = st.at("contradictions").get<arith::i64>();
  run.stats.max_depth = st.at("max_depth").get<arith::i64>();
  run.trace = trace_from(j.at("trace"));
  if (j.contains("witness")) run.witness = j.at("witness").get<std::string>();
  return run;
}

ordered_json criterion_json(const CriterionResult& c) {
  return ordered_json{
      {"index", c.index}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

CriterionResult criterion_from(const ordered_json& j) {
  CriterionResult c;
  c.index = j.at("index").get<int>();
  c.name = j.at("name").get<std::string>();
  c.passed = j.at("passed").get<bool>();
  c.detail = j.at("detail").get<std::string>();
  return c;
}

ordered_json case_json(const Case& c) {
  ordered_json j{{"id", c.id}, {"kind", c.kind}};
  if (c.verdict) j["verdict"] = verdict_json(*c.verdict);
  if (c.screen) j["screen"] = screen_json(*c.screen);
  if (c.fusion) j["fusion"] = fusion_json(*c.fusion);
  if (c.criterion) j["criterion"] = criterion_json(*c.criterion);
  if (c.wall_ms) j["wall_ms"] = *c.wall_ms;
  return j;
}

Case case_from(const ordered_json& j) {
  Case c;
  c.id = j.at("id").get<std::string>();
  c.kind = j.at("kind").get<std::string>();
  if (j.contains("verdict")) c.verdict = verdict_from(j.at("verdict"));
  if (j.contains("screen")) c.screen = screen_from(j.at("screen"));
  if (j.contains("fusion")) c.fusion = fusion_from(j.at("fusion"));
  if (j.contains("criterion")) c.criterion = criterion_from(j.at("criterion"));
  if (j.contains("wall_ms")) c.wall_ms = j.at("wall_ms").get<double>();
  return c;
}

std::string case_result(const Case& c) {
  if (c.verdict) return verdict::outcome_name(c.verdict->outcome);
  if (c.screen) return c.screen->passed ? "passed" : "excluded";
  if (c.fusion) return fusion_outcome_label(c.fusion->outcome);
  if (c.criterion) return c.criterion->passed ? "pass" : "FAIL";
  return "empty";
}

std::string ms_string(double ms) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

}  // namespace

std::string fusion_outcome_label(fusion::Outcome o) {
  switch (o) {
    case fusion::Outcome::Feasible: return "feasible";
    case fusion::Outcome::Infeasible: return "infeasible";
    case fusion::Outcome::BudgetExceeded: return "budget-exceeded";
  }
  fail("InvalidArgument", "unknown fusion outcome value");
}

fusion::Outcome fusion_outcome_from_label(const std::string& label) {
  for (fusion::Outcome o : {fusion::Outcome::Feasible, fusion::Outcome::Infeasible,
                            fusion::Outcome::BudgetExceeded})
    if (fusion_outcome_label(o) == label) return o;
  fail("ParseError", "unknown fusion outcome label '" + label + "'");
}

Case verdict_case(const verdict::CaseVerdict& v) {
  Case c;
  c.id = v.g_order > 0 ? "g=" + std::to_string(v.g_order) : "whole-dimension";
  c.kind = "verdict";
  c.verdict = v;
  return c;
}

Case screen_case(const profile::FilterReport& r) {
  Case c;
  c.id = r.type.str();
  c.kind = "screen";
  c.screen = r;
  return c;
}

Case fusion_case(const FusionRun& run) {
  Case c;
  c.id = run.type.str() + " over " + run.group;
  c.kind = "fusion";
  c.fusion = run;
  return c;
}

std::string witness_summary(const fusion::FusionTable& table) {
  std::string out = "degrees:";
  for (arith::i64 i = 0; i < table.n; ++i)
    out += " e" + std::to_string(i) + "=" + std::to_string(table.degree[i]);
  out += "\nduals:";
  for (arith::i64 i = 0; i < table.n; ++i)
    out += " e" + std::to_string(i) + "*=e" + std::to_string(table.dual[i]);
  for (arith::i64 a = table.group.order; a < table.n; ++a)
    for (arith::i64 b = table.group.order; b < table.n; ++b) {
      auto row = table.row(a, b);
      if (!row) continue;
      std::string rhs;
      for (arith::i64 c = 0; c < table.n; ++c) {
        if ((*row)[c] == 0) continue;
        if (!rhs.empty()) rhs += " + ";
        if ((*row)[c] != 1) rhs += std::to_string((*row)[c]) + "*";
        rhs += "e" + std::to_string(c);
      }
      out += "\ne" + std::to_string(a) + "*e" + std::to_string(b) + " = " +
             (rhs.empty() ? "0" : rhs);
    }
  return out;
}

Case criterion_case(const CriterionResult& cr) {
  Case c;
  c.id = "criterion-" + std::to_string(cr.index);
  c.kind = "criterion";
  c.criterion = cr;
  return c;
}

std::string to_json(const Report& r) {
  ordered_json config{{"command", r.config.command}};
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.config.params) params[k] = v;
  config["params"] = std::move(params);

  ordered_json cases = ordered_json::array();
  for (const auto& c : r.cases) cases.push_back(case_json(c));

  ordered_json findings = ordered_json::array();
  for (const auto& f : r.findings)
    findings.push_back(ordered_json{{"kind", f.kind}, {"detail", f.detail}});

  ordered_json j{{"version", r.version},
                 {"config", std::move(config)},
                 {"cases", std::move(cases)},
                 {"findings", std::move(findings)}};
  if (r.total_ms) j["total_ms"] = *r.total_ms;
  return j.dump(2) + "\n";
}

Report from_json(const std::string& text) {
  try {
    const auto j = ordered_json::parse(text);
    Report r;
    r.version = j.at("version").get<std::string>();
    r.config.command = j.at("config").at("command").get<std::string>();
    for (const auto& [k, v] : j.at("config").at("params").items())
      r.config.params[k] = v.get<std::string>();
    for (const auto& c : j.at("cases")) r.cases.push_back(case_from(c));
    for (const auto& f : j.at("findings"))
      r.findings.push_back({f.at("kind").get<std::string>(), f.at("detail").get<std::string>()});
    if (j.contains("total_ms")) r.total_ms = j.at("total_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", std::string("malformed report JSON: ") + e.what());
  } catch (const Error&) {
    throw;
  }
}

std::string to_markdown(const Report& r) {
  std::string md;
  md += "# hopfcheck report\n\n";
  md += "- version: " + r.version + "\n";
  md += "- command: " + r.config.command + "\n";
  for (const auto& [k, v] : r.config.params) md += "- " + k + ": " + v + "\n";
  md += "\n## Cases\n\n";
  if (r.cases.empty()) {
    md += "None.\n";
  } else {
    md += "| case | kind | result |\n| --- | --- | --- |\n";
    for (const auto& c : r.cases)
      md += "| " + c.id + " | " + c.kind + " | " + case_result(c) + " |\n";
    for (const auto& c : r.cases) {
      md += "\n### " + c.id + ": " + case_result(c);
      if (c.wall_ms) md += " (" + ms_string(*c.wall_ms) + " ms)";
      md += "\n\n";
      if (c.verdict) {
        if (c.verdict->surviving_types.empty()) {
          md += "No surviving types.\n";
        } else {
          md += "Surviving types:";
          for (const auto& t : c.verdict->surviving_types) md += " " + t.str();
          md += "\n";
        }
        for (const auto& s : c.verdict->trace.steps)
          md += "- [" + s.rule + "] " + s.detail + " (" + s.citation + ")\n";
      } else if (c.screen) {
        for (const auto& f : c.screen->failures)
          md += "- [" + f.rule + "] " + f.detail + " (" + f.citation + ")\n";
        if (c.screen->passed && !c.screen->flags.empty()) {
          md += "Flags:";
          for (const auto& fl : c.screen->flags) md += " " + fl;
          md += "\n";
        }
        if (c.screen->passed && c.screen->flags.empty()) md += "No filter objects.\n";
      } else if (c.fusion) {
        md += "Searched " + std::to_string(c.fusion->stats.nodes) + " nodes, " +
              std::to_string(c.fusion->stats.contradictions) + " contradictions.\n";
        for (const auto& s : c.fusion->trace.steps)
          md += "- [" + s.rule + "] " + s.detail + " (" + s.citation + ")\n";
        if (c.fusion->witness) md += "```\n" + *c.fusion->witness + "\n```\n";
      } else if (c.criterion) {
        md += c.criterion->detail + "\n";
      }
    }
  }
  md += "\n## Findings\n\n";
  if (r.findings.empty()) {
    md += "None.\n";
  } else {
    for (const auto& f : r.findings) md += "- " + f.kind + ": " + f.detail + "\n";
  }
  if (r.total_ms) md += "\nTotal: " + ms_string(*r.total_ms) + " ms\n";
  return md;
}

}  // namespace hopfcheck::report
