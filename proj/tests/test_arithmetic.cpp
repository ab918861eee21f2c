#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "hopfcheck/arithmetic.hpp"
#include "hopfcheck/errors.hpp"

using namespace hopfcheck;
using arith::i64;
using arith::TypeSolution;

namespace {

bool is_prime_oracle(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Independent enumeration oracle for the four-degree shape 1, d1, d2, d3 with
// the degree-1 count pinned to g: plain nested loops, no pruning, no sharing
// with the library code path.
std::vector<TypeSolution> enumerate_oracle_three(i64 dim, i64 g, i64 d1, i64 d2, i64 d3) {
  std::vector<TypeSolution> out;
  const i64 rest = dim - g;
  if (rest < 0) return out;
  for (i64 a = 0; a * d1 * d1 <= rest; ++a)
    for (i64 b = 0; a * d1 * d1 + b * d2 * d2 <= rest; ++b)
      for (i64 c = 0; a * d1 * d1 + b * d2 * d2 + c * d3 * d3 <= rest; ++c)
        if (a * d1 * d1 + b * d2 * d2 + c * d3 * d3 == rest)
          out.push_back(TypeSolution{{{1, g}, {d1, a}, {d2, b}, {d3, c}}});
  return out;
}

}  // namespace

TEST_CASE("primality matches a trial-division oracle") {
  for (i64 n = 0; n <= 5000; ++n) CHECK(arith::is_prime(n) == is_prime_oracle(n));
}

TEST_CASE("divisor lists are exact and sorted") {
  CHECK(arith::divisors(100) == std::vector<i64>{1, 2, 4, 5, 10, 20, 25, 50, 100});
  CHECK(arith::divisors(484) == std::vector<i64>{1, 2, 4, 11, 22, 44, 121, 242, 484});
  for (i64 n = 1; n <= 2000; ++n) {
    const auto ds = arith::divisors(n);
    CHECK(std::is_sorted(ds.begin(), ds.end()));
    size_t k = 0;
    for (i64 d = 1; d <= n; ++d)
      if (n % d == 0) {
        REQUIRE(k < ds.size());
        CHECK(ds[k++] == d);
      }
    CHECK(k == ds.size());
  }
}

TEST_CASE("gcd basics") {
  CHECK(arith::gcd(12, 18) == 6);
  CHECK(arith::gcd(0, 7) == 7);
  CHECK(arith::gcd(35, 64) == 1);
}

TEST_CASE("dimension enumeration agrees with the nested-loop oracle") {
  // Small regime dims 4q^2 and general-regime dims p^2 q^2 with p = 2.
  for (i64 q : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    const i64 dim = 4 * q * q;
    for (i64 g : arith::divisors(dim)) {
      auto got = arith::enumerate_dimension_solutions(dim, g, {1, 2, 4, q});
      auto want = enumerate_oracle_three(dim, g, 2, 4, q);
      REQUIRE(got.size() == want.size());
      for (const auto& s : want) CHECK(std::find(got.begin(), got.end(), s) != got.end());
    }
  }
  // A p = 3 profile for shape coverage.
  {
    const i64 dim = 9 * 83 * 83;  // solutions are sparse; oracle loop is still fast
    auto got = arith::enumerate_dimension_solutions(dim, 9, {1, 3, 9, 83});
    auto want = enumerate_oracle_three(dim, 9, 3, 9, 83);
    CHECK(got.size() == want.size());
  }
}

TEST_CASE("enumeration output is duplicate-free and lexicographic") {
  auto sols = arith::enumerate_dimension_solutions(100, 2, {1, 2, 4, 5});
  REQUIRE(sols.size() == 4);
  for (size_t i = 0; i + 1 < sols.size(); ++i) {
    std::vector<i64> a, b;
    for (auto& [d, n] : sols[i].counts) a.push_back(n);
    for (auto& [d, n] : sols[i + 1].counts) b.push_back(n);
    CHECK(a < b);
  }
  // the four solutions all have c = 2 and 4a + 16b = 48
  for (const auto& s : sols) {
    CHECK(s.counts.at(5) == 2);
    CHECK(4 * s.counts.at(2) + 16 * s.counts.at(4) == 48);
  }
}

TEST_CASE("pinned enumeration reproduces the unique filtered rows") {
  std::map<i64, i64> pin{{2, 0}};
  auto sols = arith::enumerate_dimension_solutions(100, 2, {1, 2, 4, 5}, pin);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].counts.at(2) == 0);
  CHECK(sols[0].counts.at(4) == 3);
  CHECK(sols[0].counts.at(5) == 2);

  // pinned a = 0 rows for the other small dimensions
  struct Row {
    i64 q, b, c;
  };
  for (Row r : {Row{7, 6, 2}, Row{11, 15, 2}, Row{13, 21, 2}}) {
    auto s = arith::enumerate_dimension_solutions(4 * r.q * r.q, 2, {1, 2, 4, r.q}, pin);
    REQUIRE(s.size() == 1);
    CHECK(s[0].counts.at(4) == r.b);
    CHECK(s[0].counts.at(r.q) == r.c);
  }
}

TEST_CASE("g_order equal to dim leaves only the all-zero solution") {
  for (i64 q : {5, 7, 11, 13}) {
    auto sols = arith::enumerate_dimension_solutions(4 * q * q, 4 * q * q, {1, 2, 4, q});
    REQUIRE(sols.size() == 1);
    for (auto& [d, n] : sols[0].counts) CHECK((d == 1 ? n == 4 * q * q : n == 0));
  }
}

TEST_CASE("enumeration input validation") {
  CHECK_THROWS_AS(arith::enumerate_dimension_solutions(100, 2, {}), Error);
  CHECK_THROWS_AS(arith::enumerate_dimension_solutions(100, 2, {1, 2, 2, 5}), Error);
  CHECK_THROWS_AS(arith::enumerate_dimension_solutions(100, 2, {1, 0, 4, 5}), Error);
  std::map<i64, i64> bad{{3, 1}};  // pin on a degree not in the set
  CHECK_THROWS_AS(arith::enumerate_dimension_solutions(100, 2, {1, 2, 4, 5}, bad), Error);
  std::map<i64, i64> neg{{2, -1}};
  CHECK_THROWS_AS(arith::enumerate_dimension_solutions(100, 2, {1, 2, 4, 5}, neg), Error);
}

TEST_CASE("no_solution_check matches a direct scan") {
  CHECK(arith::no_solution_check(100, 2, 25));
  CHECK_FALSE(arith::no_solution_check(100, 0, 25));
  for (i64 dim : {40, 100, 196, 484}) {
    for (i64 offset = 0; offset <= dim; ++offset)
      for (i64 sq : {4, 9, 25, 49}) {
        bool found = false;
        for (i64 c = 0; offset + c * sq <= dim; ++c) found |= offset + c * sq == dim;
        CHECK(arith::no_solution_check(dim, offset, sq) == !found);
      }
  }
}

TEST_CASE("coideal obstruction certificates") {
  auto ob = arith::coideal_obstruction(5, 13);
  CHECK_FALSE(ob.eq1_solvable);
  CHECK_FALSE(ob.eq2_solvable);
  CHECK(ob.obstructed);

  CHECK(arith::coideal_obstruction(3, 7).eq1_solvable);
  CHECK_FALSE(arith::coideal_obstruction(3, 7).obstructed);

  for (i64 q : {3, 5, 7, 11, 13, 17}) CHECK_FALSE(arith::coideal_obstruction(2, q).obstructed);

  auto c513 = arith::coideal_obstruction(5, 1283);
  CHECK(c513.obstructed);  // 1283 = 3 mod 5, 1283^2 = 4 mod 5, 1283^2-1283 = 1 mod 5

  CHECK_THROWS_AS(arith::coideal_obstruction(4, 7), Error);
}

TEST_CASE("bounded coin representability matches brute force") {
  auto oracle = [](i64 target, const std::vector<arith::CoinPart>& parts) {
    std::vector<char> reach(static_cast<size_t>(target) + 1, 0);
    reach[0] = 1;
    for (const auto& p : parts) {
      std::vector<char> next = reach;
      for (i64 k = 1; k <= p.cap; ++k)
        for (i64 v = 0; v + k * p.part <= target; ++v)
          if (reach[static_cast<size_t>(v)]) next[static_cast<size_t>(v + k * p.part)] = 1;
      reach = std::move(next);
    }
    return reach[static_cast<size_t>(target)] != 0;
  };

  // the refutation residuals: 15 and 14 are not 4a + 13c with a <= 21, c <= 2
  CHECK_FALSE(arith::coin_representable(15, std::vector<arith::CoinPart>{{4, 21}, {13, 2}}));
  CHECK_FALSE(arith::coin_representable(14, std::vector<arith::CoinPart>{{4, 21}, {13, 2}}));
  CHECK(arith::coin_representable(16, std::vector<arith::CoinPart>{{4, 21}, {13, 2}}));

  for (i64 target = 0; target <= 60; ++target)
    for (i64 cap1 : {0, 1, 2, 5})
      for (i64 cap2 : {0, 1, 3}) {
        std::vector<arith::CoinPart> parts{{4, cap1}, {13, cap2}, {2, 2}};
        CHECK(arith::coin_representable(target, parts) == oracle(target, parts));
      }
}
