#pragma once

#include <string>
#include <vector>

#include "hopfcheck/arithmetic.hpp"
#include "hopfcheck/fusion.hpp"
#include "hopfcheck/typeprofile.hpp"

namespace hopfcheck::fusion::detail {

using arith::i64;

/**
 * Stabilizer orders s with s | gcd(degree^2, group_order) such that
 * degree^2 - s is a sum of higher degrees from the type, each degree e
 * contributing at most count(e) * e summands.
 */
std::vector<i64> admissible_stabilizer_orders(const profile::AlgebraType& type,
                                              i64 group_order, i64 degree);

/** Can class_size be partitioned into orbit lengths group_order / s? */
bool orbit_partition_feasible(i64 class_size, i64 group_order,
                              const std::vector<i64>& stab_orders);

/** Upper bound for the multiplicity of c in a * b from degrees alone. */
i64 slot_cap(const FusionTable& t, i64 a, i64 b, i64 c);

Contradiction make_contradiction(const std::string& rule_id,
                                 std::string detail);

}  // namespace hopfcheck::fusion::detail
