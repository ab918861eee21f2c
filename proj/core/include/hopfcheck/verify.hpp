#pragma once

#include <string>
#include <vector>

#include "hopfcheck/report.hpp"
#include "hopfcheck/verdict.hpp"

namespace hopfcheck::verify {

using arith::i64;

struct ReplayIssue {
  std::string where;
  std::string detail;
  bool operator==(const ReplayIssue&) const = default;
};

struct ReplayResult {
  std::vector<ReplayIssue> issues;
  bool ok() const { return issues.empty(); }
};

/**
 * Re-establishes a recorded verdict from its trace alone, through checker
 * code separate from the classifier: every step must cite the rule catalog,
 * every machine-checkable step (dimension counts, divisibility certificates,
 * pinned enumerations, filter exclusions, table searches) is recomputed from
 * the step's recorded data, and the outcome label must be backed by the
 * steps present. `fusion_budget` caps the node budget of re-run searches;
 * 0 keeps each step's recorded budget.
 */
ReplayResult replay_case(const verdict::CaseVerdict& v, i64 fusion_budget = 0);

struct VerifyOptions {
  i64 node_budget = 10'000'000;
  bool no_timings = false;
  i64 property_seed = 20260814;
  int property_instances = 120;
};

/**
 * Runs the twelve pinned acceptance checks: the four enumeration pins, the
 * five table refutations with their node counts, the character-table oracle
 * sweep, the divisibility certificates, the small-regime answer key, the
 * obstruction sharpening, the randomized property suites, and the
 * determinism double-run. Produces one criterion case per check plus a
 * finding for every failure or divergence.
 */
report::Report verify_full(const VerifyOptions& options = {});

}  // namespace hopfcheck::verify
