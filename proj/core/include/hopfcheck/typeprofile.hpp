#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfcheck/arithmetic.hpp"

namespace hopfcheck::profile {

using arith::i64;

/**
 * The two parameter regimes the classifier supports: General requires
 * p^4 < q; Small is p = 2 with q in {3, 5, 7, 11, 13}. They are disjoint.
 */
enum class Regime { General, Small };

struct DimensionProfile {
  i64 p = 0;
  i64 q = 0;
  Regime regime = Regime::General;

  i64 dim() const { return p * p * q * q; }
  bool operator==(const DimensionProfile&) const = default;
};

/** Throws NotPrime, EqualPrimes or UnsupportedRegime. */
DimensionProfile make_profile(i64 p, i64 q);

/** Admissible irreducible degrees {1, p, p^2, q}, sorted ascending. */
std::vector<i64> frobenius_degree_set(const DimensionProfile& profile);
std::vector<i64> frobenius_degree_set(i64 p, i64 q);

/**
 * A candidate algebra type: the multiset of irreducible degrees with
 * multiplicities, e.g. "(1,2;4,3;5,2)". Entries have strictly increasing
 * degrees and positive counts.
 */
struct AlgebraType {
  std::vector<std::pair<i64, i64>> entries;

  i64 dim() const;      // sum of count * degree^2
  i64 g_order() const;  // count at degree 1, or 0 if absent
  i64 count_at(i64 degree) const;

  std::string str() const;
  static AlgebraType parse(const std::string& s);  // throws ParseError
  static AlgebraType from_solution(const arith::TypeSolution& s);

  bool operator==(const AlgebraType&) const = default;
};

struct FilterFailure {
  std::string rule;
  std::string citation;
  std::string detail;
  bool operator==(const FilterFailure&) const = default;
};

struct FilterOutcome {
  std::vector<FilterFailure> failures;
  std::vector<std::string> flags;
  bool operator==(const FilterOutcome&) const = default;
};

struct FilterReport {
  AlgebraType type;
  bool passed = true;
  std::vector<FilterFailure> failures;
  std::vector<std::string> flags;
  bool operator==(const FilterReport&) const = default;
};

/** Fails iff the grouplike order is exactly 1. */
FilterOutcome nontrivial_grouplike_filter(const AlgebraType& t);

/** Fails unless g | n d^2 for every nonempty degree class (d, n), d > 1. */
FilterOutcome grouplike_count_bound_filter(const AlgebraType& t);

/**
 * For each nonempty degree class d > 1: some admissible stabilizer order s
 * (s | gcd(d^2, g)) must leave d^2 - s expressible as a bounded sum of
 * admissible constituent degrees. Fails otherwise.
 */
FilterOutcome stabilizer_residual_filter(const DimensionProfile& profile, const AlgebraType& t);

/**
 * Quotient-dimension divisibility. General regime: g + a p^2 + b p^4 must
 * divide dim, unconditionally. Small regime: applies only when a > 0, the
 * 2-part of g is exactly 2 and no degree strictly between 1 and 4 other
 * than 2 occurs; then g + 4a must divide dim. Flags (never fails on)
 * "quotient-is-whole" when the quotient equals dim and "pq2-quotient" when
 * it equals p q^2.
 */
FilterOutcome p_part_quotient_filter(const DimensionProfile& profile, const AlgebraType& t);

/** All filters in fixed order; passed iff no failures. */
FilterReport screen_one(const DimensionProfile& profile, const AlgebraType& t);

/**
 * Enumerates all type solutions for the profile at the given grouplike
 * order and screens each; deterministic enumeration order.
 */
std::vector<FilterReport> screen_types(const DimensionProfile& profile, i64 g_order);

}  // namespace hopfcheck::profile
