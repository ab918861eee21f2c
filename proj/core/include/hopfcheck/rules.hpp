#pragma once

#include <string>
#include <vector>

namespace hopfcheck::rules {

/**
 * Catalog of deduction rules used in filter reports and proof traces.
 * Every rule has a stable string id and a citation describing the imported
 * mathematical fact it relies on. Ids are part of the serialized interface:
 * renaming one is a breaking change.
 */
struct RuleInfo {
  std::string id;
  std::string citation;
};

/** Lookup by id. Throws Error("UnknownRule") for an unknown id. */
const RuleInfo& rule(const std::string& id);

bool has_rule(const std::string& id);

/** All catalog ids, sorted. */
std::vector<std::string> all_rule_ids();

}  // namespace hopfcheck::rules
