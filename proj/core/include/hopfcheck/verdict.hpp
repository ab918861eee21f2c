#pragma once

#include <string>
#include <vector>

#include "hopfcheck/trace.hpp"
#include "hopfcheck/typeprofile.hpp"

namespace hopfcheck::verdict {

using arith::i64;

/**
 * Structural conclusion for one grouplike-order case. Unsupported is only
 * ever emitted when a certificate the case analysis relies on could not be
 * produced (budget exhaustion or an unexpected search result); it marks the
 * case as unestablished rather than guessing.
 */
enum class Outcome {
  Impossible,
  UpperSemisolvable,
  LowerSemisolvable,
  SemisolvableOrBiproduct,
  BiproductCandidate,
  DualGroupAlgebra,
  Unsupported,
};

/** Stable kebab-case label, e.g. "upper-semisolvable". */
std::string outcome_name(Outcome o);

/** Inverse of outcome_name; throws ParseError. */
Outcome outcome_from_name(const std::string& name);

struct CaseVerdict {
  profile::DimensionProfile profile;
  /** Grouplike order of the dual for this case; 0 for a whole-dimension verdict. */
  i64 g_order = 0;
  Outcome outcome = Outcome::Unsupported;
  /** Candidate types that survive every filter and elimination for this case. */
  std::vector<profile::AlgebraType> surviving_types;
  trace::ProofTrace trace;

  bool operator==(const CaseVerdict&) const = default;
};

/**
 * Classification at dimension p^2 q^2 under the hypothesis p^4 < q: one
 * verdict per divisor of the dimension, ascending. Verdicts are certified
 * by quotient-candidate elimination and direct structural arguments; no
 * type enumeration is performed in this regime.
 *
 * Throws NotPrime, EqualPrimes, or HypothesisViolation when p^4 >= q (use
 * classify_4q2 for p = 2 with small q).
 */
std::vector<CaseVerdict> classify_p2q2(i64 p, i64 q);

/**
 * Classification at dimension 4 q^2. For q = 3 returns a single cited
 * whole-dimension verdict (g_order 0) with no computation; for q > 13
 * delegates to classify_p2q2(2, q); for q in {5, 7, 11, 13} returns one
 * verdict per divisor of 4 q^2, certified by enumeration, filters and
 * fusion elimination. Throws NotPrime or EqualPrimes.
 */
std::vector<CaseVerdict> classify_4q2(i64 q);

/** True iff gcd(g_h, g_hdual) = p^2, the biproduct criterion. */
bool biproduct_condition(i64 g_h, i64 g_hdual, i64 p);

/**
 * True iff a Hopf subalgebra of dimension dim_k has index p in the profile
 * dimension, i.e. dim_k = p q^2, which forces lower semisolvability.
 * Throws DivisibilityViolation when dim_k does not divide the dimension.
 */
bool subalgebra_semisolvability_rule(i64 dim_k, const profile::DimensionProfile& profile);

}  // namespace hopfcheck::verdict
