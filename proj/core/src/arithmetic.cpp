#include "hopfcheck/arithmetic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hopfcheck/errors.hpp"

namespace hopfcheck::arith {

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

std::vector<i64> divisors(i64 n) {
  if (n < 1) fail("InvalidArgument", "divisors requires n >= 1");
  std::vector<i64> low, high;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

namespace {

// Recursion goes over degrees in descending order; the last (smallest)
// degree is solved in closed form instead of looped, which keeps divisor
// cases with one huge count (e.g. a ~ q^2) cheap.
void enumerate_rec(i64 remaining, std::span<const i64> degrees,
                   const std::map<i64, i64>& pins, std::map<i64, i64>& acc,
                   std::vector<TypeSolution>& out) {
  if (degrees.empty()) {
    if (remaining == 0) out.push_back(TypeSolution{acc});
    return;
  }
  const i64 d = degrees.front();
  const i64 sq = d * d;
  auto rest = degrees.subspan(1);
  auto pin = pins.find(d);
  if (rest.empty() && pin == pins.end()) {
    if (remaining % sq == 0) {
      acc[d] = remaining / sq;
      out.push_back(TypeSolution{acc});
      acc.erase(d);
    }
    return;
  }
  const i64 lo = pin == pins.end() ? 0 : pin->second;
  const i64 hi = pin == pins.end() ? remaining / sq : pin->second;
  for (i64 n = lo; n <= hi; ++n) {
    if (n * sq > remaining) break;
    acc[d] = n;
    enumerate_rec(remaining - n * sq, rest, pins, acc, out);
  }
  acc.erase(d);
}

}  // namespace

std::vector<TypeSolution> enumerate_dimension_solutions(
    i64 dim, i64 g_order, const std::vector<i64>& degrees,
    const std::map<i64, i64>& pins) {
  if (degrees.empty()) fail("EmptyDegreeSet", "no degrees to enumerate over");
  std::vector<i64> degs = degrees;
  std::sort(degs.begin(), degs.end());
  if (std::adjacent_find(degs.begin(), degs.end()) != degs.end())
    fail("InvalidArgument", "degree set contains a repeated degree");
  if (degs.front() < 1) fail("InvalidArgument", "degrees must be positive");
  if (degs.front() == 1) degs.erase(degs.begin());  // its count is g_order
  for (const auto& [d, n] : pins) {
    if (n < 0) fail("InconsistentPin", "negative pinned count for degree " + std::to_string(d));
    if (d == 1) {
      if (n != g_order) fail("InconsistentPin", "degree-1 count is fixed by g_order");
      continue;
    }
    if (!std::binary_search(degs.begin(), degs.end(), d))
      fail("InconsistentPin", "pin names degree " + std::to_string(d) + " outside the degree set");
  }
  std::vector<TypeSolution> out;
  if (dim < g_order) return out;
  std::map<i64, i64> acc;
  acc[1] = g_order;
  std::vector<i64> descending(degs.rbegin(), degs.rend());
  enumerate_rec(dim - g_order, descending, pins, acc, out);
  std::sort(out.begin(), out.end(),
            [](const TypeSolution& a, const TypeSolution& b) { return a.counts < b.counts; });
  return out;
}

bool no_solution_check(i64 dim, i64 offset, i64 square) {
  if (square <= 0) fail("InvalidArgument", "square must be positive");
  const i64 rem = dim - offset;
  return rem < 0 || rem % square != 0;
}

CoidealObstruction coideal_obstruction(i64 p, i64 q) {
  if (!is_prime(p) || !is_prime(q)) fail("NotPrime", "p and q must be prime");
  CoidealObstruction r;
  r.eq1_solvable = (q * q - 1) % p == 0;  // m = (q^2-1)/p >= 1 since q >= 2
  r.eq2_solvable = (q * q - q) % p == 0;  // n = (q^2-q)/p >= 1
  r.obstructed = !r.eq1_solvable && !r.eq2_solvable;
  return r;
}

bool coin_representable(i64 target, std::span<const CoinPart> parts) {
  if (target < 0) return false;
  if (target == 0) return true;
  std::vector<char> reach(static_cast<size_t>(target) + 1, 0);
  reach[0] = 1;
  for (const auto& [part, cap] : parts) {
    if (part <= 0 || cap <= 0) continue;
    // bounded knapsack feasibility, one part class at a time
    std::vector<char> next = reach;
    for (i64 k = 1; k <= cap; ++k) {
      const i64 shift = part * k;
      if (shift > target) break;
      for (i64 s = target; s >= shift; --s)
        if (reach[static_cast<size_t>(s - shift)]) next[static_cast<size_t>(s)] = 1;
    }
    reach.swap(next);
    if (reach[static_cast<size_t>(target)]) return true;
  }
  return reach[static_cast<size_t>(target)] != 0;
}

}  // namespace hopfcheck::arith
