#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hopfcheck::arith {

using i64 = std::int64_t;

bool is_prime(i64 n);
i64 gcd(i64 a, i64 b);

/** All positive divisors of n >= 1, ascending. */
std::vector<i64> divisors(i64 n);

/**
 * One solution of the dimension equation: a count per degree > 1.
 * Degrees with count zero are kept so that solution vectors over a fixed
 * degree set are directly comparable.
 */
struct TypeSolution {
  std::map<i64, i64> counts;  // degree -> nonnegative count

  bool operator==(const TypeSolution&) const = default;
};

/**
 * Enumerates every nonnegative count vector (n_d)_{d in degrees} with
 *
 *   dim = g_order + sum_d n_d * d^2.
 *
 * `pins` fixes the count of selected degrees. The result is complete,
 * duplicate-free and lexicographically ordered by the count vector keyed by
 * ascending degree.
 *
 * Errors: EmptyDegreeSet if `degrees` is empty; InconsistentPin if a pin
 * names a degree outside `degrees`, repeats a degree, or is negative.
 */
std::vector<TypeSolution> enumerate_dimension_solutions(
    i64 dim, i64 g_order, const std::vector<i64>& degrees,
    const std::map<i64, i64>& pins = {});

/** True iff no integer c >= 0 satisfies dim == offset + c * square. */
bool no_solution_check(i64 dim, i64 offset, i64 square);

/**
 * Solvability of the two biproduct coideal equations
 *   q^2 = 1 + m p   and   q^2 = q + n p     (m, n >= 1).
 * `obstructed` means neither is solvable, which forces the semisolvable
 * branch of the p^2 / p^2 q dichotomy.
 */
struct CoidealObstruction {
  bool eq1_solvable = false;  // q^2 = 1 + m p
  bool eq2_solvable = false;  // q^2 = q + n p
  bool obstructed = false;

  bool operator==(const CoidealObstruction&) const = default;
};

CoidealObstruction coideal_obstruction(i64 p, i64 q);

/** A part usable in a bounded decomposition: value `part`, at most `cap` times. */
struct CoinPart {
  i64 part = 0;
  i64 cap = 0;
};

/**
 * True iff `target` equals sum_i part_i * x_i for integers 0 <= x_i <= cap_i.
 * target < 0 is never representable; target == 0 always is.
 */
bool coin_representable(i64 target, std::span<const CoinPart> parts);

}  // namespace hopfcheck::arith
