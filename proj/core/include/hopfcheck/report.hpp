#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfcheck/fusion.hpp"
#include "hopfcheck/typeprofile.hpp"
#include "hopfcheck/verdict.hpp"
#include "hopfcheck/version.hpp"

namespace hopfcheck::report {

inline constexpr const char* kVersion = hopfcheck::kVersion;

/** Echo of the resolved command line; params are kept sorted by key. */
struct RunConfig {
  std::string command;
  std::map<std::string, std::string> params;
  bool operator==(const RunConfig&) const = default;
};

/** A divergence between a computed result and the recorded conclusion. */
struct Finding {
  std::string kind;
  std::string detail;
  bool operator==(const Finding&) const = default;
};

/** One table search: which type, over which group, and how it ended. */
struct FusionRun {
  profile::AlgebraType type;
  std::string group;
  fusion::Outcome outcome = fusion::Outcome::Infeasible;
  fusion::SearchStats stats;
  trace::ProofTrace trace;
  std::optional<std::string> witness;  // rendered table when one was found
  bool operator==(const FusionRun&) const = default;
};

/** Compact text rendering of a completed table: duals and product rows. */
std::string witness_summary(const fusion::FusionTable& table);

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  bool operator==(const CriterionResult&) const = default;
};

/** One report entry; exactly one payload member is set, matching `kind`. */
struct Case {
  std::string id;
  std::string kind;  // "verdict" | "screen" | "fusion" | "criterion"
  std::optional<verdict::CaseVerdict> verdict;
  std::optional<profile::FilterReport> screen;
  std::optional<FusionRun> fusion;
  std::optional<CriterionResult> criterion;
  std::optional<double> wall_ms;  // absent when timings are disabled
  bool operator==(const Case&) const = default;
};

struct Report {
  std::string version = kVersion;
  RunConfig config;
  std::vector<Case> cases;
  std::vector<Finding> findings;
  std::optional<double> total_ms;  // whole-run time; absent when timings are disabled
  bool operator==(const Report&) const = default;
};

std::string fusion_outcome_label(fusion::Outcome o);
fusion::Outcome fusion_outcome_from_label(const std::string& label);

Case verdict_case(const verdict::CaseVerdict& v);
Case screen_case(const profile::FilterReport& r);
Case fusion_case(const FusionRun& run);
Case criterion_case(const CriterionResult& c);

/** Pretty-printed JSON with stable key order; ends with a newline. */
std::string to_json(const Report& r);

/** Inverse of to_json; throws ParseError on malformed input. */
Report from_json(const std::string& text);

/** Human-readable rendering carrying the same per-case results as the JSON. */
std::string to_markdown(const Report& r);

}  // namespace hopfcheck::report
