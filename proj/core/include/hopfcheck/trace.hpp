#pragma once

#include <map>
#include <string>
#include <vector>

namespace hopfcheck::trace {

/**
 * One deduction step. `rule` is a catalog id (rules.hpp), `citation` the
 * catalog citation at construction time, `detail` human-readable, and
 * `data` optional machine-readable inputs used by replay.
 */
struct TraceStep {
  std::string rule;
  std::string citation;
  std::string detail;
  std::map<std::string, std::string> data;
  bool operator==(const TraceStep&) const = default;
};

struct ProofTrace {
  std::vector<TraceStep> steps;
  bool operator==(const ProofTrace&) const = default;
};

/** Builds a step with the catalog citation; throws UnknownRule. */
TraceStep make_step(const std::string& rule_id, std::string detail,
                    std::map<std::string, std::string> data = {});

}  // namespace hopfcheck::trace
