#include "hopfcheck/typeprofile.hpp"

#include <algorithm>
#include <cctype>

#include "hopfcheck/errors.hpp"
#include "hopfcheck/rules.hpp"

namespace hopfcheck::profile {

namespace {

bool is_small_q(i64 q) { return q == 3 || q == 5 || q == 7 || q == 11 || q == 13; }

FilterFailure make_failure(const std::string& rule_id, std::string detail) {
  return FilterFailure{rule_id, rules::rule(rule_id).citation, std::move(detail)};
}

}  // namespace

DimensionProfile make_profile(i64 p, i64 q) {
  if (!arith::is_prime(p) || !arith::is_prime(q))
    fail("NotPrime", "p and q must both be prime, got p=" + std::to_string(p) +
                         " q=" + std::to_string(q));
  if (p == q) fail("EqualPrimes", "p and q must be distinct");
  if (p * p * p * p < q) return DimensionProfile{p, q, Regime::General};
  if (p == 2 && is_small_q(q)) return DimensionProfile{p, q, Regime::Small};
  fail("UnsupportedRegime", "neither p^4 < q nor (p = 2, q <= 13) holds for p=" +
                                std::to_string(p) + " q=" + std::to_string(q));
}

std::vector<i64> frobenius_degree_set(const DimensionProfile& profile) {
  std::vector<i64> degs{1, profile.p, profile.p * profile.p, profile.q};
  std::sort(degs.begin(), degs.end());
  return degs;
}

std::vector<i64> frobenius_degree_set(i64 p, i64 q) {
  return frobenius_degree_set(make_profile(p, q));
}

i64 AlgebraType::dim() const {
  i64 s = 0;
  for (auto& [d, n] : entries) s += n * d * d;
  return s;
}

i64 AlgebraType::g_order() const { return count_at(1); }

i64 AlgebraType::count_at(i64 degree) const {
  for (auto& [d, n] : entries)
    if (d == degree) return n;
  return 0;
}

std::string AlgebraType::str() const {
  std::string s = "(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ";";
    s += std::to_string(entries[i].first) + "," + std::to_string(entries[i].second);
  }
  return s + ")";
}

AlgebraType AlgebraType::parse(const std::string& s) {
  size_t i = 0;
  auto parse_int = [&]() -> i64 {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("ParseError", "expected digit at position " + std::to_string(i) + " in '" + s + "'");
    i64 v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return v;
  };
  auto expect = [&](char c) {
    if (i >= s.size() || s[i] != c)
      fail("ParseError", std::string("expected '") + c + "' at position " + std::to_string(i) +
                             " in '" + s + "'");
    ++i;
  };

  AlgebraType t;
  expect('(');
  while (true) {
    const i64 d = parse_int();
    expect(',');
    const i64 n = parse_int();
    if (d < 1 || n < 1) fail("ParseError", "degrees and counts must be positive in '" + s + "'");
    if (!t.entries.empty() && t.entries.back().first >= d)
      fail("ParseError", "degrees must be strictly increasing in '" + s + "'");
    t.entries.emplace_back(d, n);
    if (i < s.size() && s[i] == ';') {
      ++i;
      continue;
    }
    break;
  }
  expect(')');
  if (i != s.size()) fail("ParseError", "trailing characters in '" + s + "'");
  return t;
}

AlgebraType AlgebraType::from_solution(const arith::TypeSolution& s) {
  AlgebraType t;
  for (auto& [d, n] : s.counts)
    if (n > 0) t.entries.emplace_back(d, n);
  return t;
}

FilterOutcome nontrivial_grouplike_filter(const AlgebraType& t) {
  FilterOutcome out;
  if (t.g_order() == 1)
    out.failures.push_back(
        make_failure("nontrivial-grouplike", "type " + t.str() + " has grouplike order 1"));
  return out;
}

FilterOutcome grouplike_count_bound_filter(const AlgebraType& t) {
  FilterOutcome out;
  const i64 g = t.g_order();
  if (g <= 1) return out;
  for (auto& [d, n] : t.entries) {
    if (d == 1) continue;
    if ((n * d * d) % g != 0)
      out.failures.push_back(make_failure(
          "grouplike-count-bound", "g=" + std::to_string(g) + " does not divide " +
                                       std::to_string(n) + "*" + std::to_string(d) + "^2=" +
                                       std::to_string(n * d * d)));
  }
  return out;
}

FilterOutcome stabilizer_residual_filter(const DimensionProfile& profile, const AlgebraType& t) {
  (void)profile;
  FilterOutcome out;
  const i64 g = t.g_order();
  if (g < 1) return out;
  for (auto& [d, n] : t.entries) {
    if (d == 1) continue;
    bool some_stabilizer_works = false;
    for (i64 s = 1; s <= g && !some_stabilizer_works; ++s) {
      if (arith::gcd(d * d, g) % s != 0) continue;
      const i64 residual = d * d - s;
      if (residual < 0) continue;
      std::vector<arith::CoinPart> parts;
      for (auto& [e, m] : t.entries)
        if (e >= 2 && e <= residual) parts.push_back({e, m * e});
      some_stabilizer_works = arith::coin_representable(residual, parts);
    }
    if (!some_stabilizer_works)
      out.failures.push_back(make_failure(
          "stabilizer-residual",
          "degree " + std::to_string(d) + " class of " + t.str() +
              ": no admissible stabilizer order leaves d^2 - s expressible in the "
              "available constituent degrees"));
  }
  return out;
}

FilterOutcome p_part_quotient_filter(const DimensionProfile& profile, const AlgebraType& t) {
  FilterOutcome out;
  const i64 g = t.g_order();
  const i64 dim = profile.dim();
  const i64 p = profile.p, q = profile.q;

  i64 quotient = 0;
  std::string rule_id;
  if (profile.regime == Regime::General) {
    const i64 a = t.count_at(p), b = t.count_at(p * p);
    quotient = g + a * p * p + b * p * p * p * p;
    rule_id = "p-part-quotient";
  } else {
    const i64 a = t.count_at(2);
    if (a == 0) return out;
    if (g % 4 != 2) return out;  // needs the 2-part of g to be exactly 2
    for (auto& [d, n] : t.entries)
      if (d > 1 && d < 4 && d != 2) return out;  // a degree-3 class defeats the stabilizer step
    quotient = g + 4 * a;
    rule_id = "two-part-quotient";
  }

  if (quotient > 0) {
    if (dim % quotient != 0)
      out.failures.push_back(make_failure(
          rule_id, "quotient dimension " + std::to_string(quotient) + " does not divide " +
                       std::to_string(dim) + " for " + t.str()));
    if (quotient == dim) out.flags.push_back("quotient-is-whole");
    if (quotient == p * q * q) out.flags.push_back("pq2-quotient");
  }
  return out;
}

FilterReport screen_one(const DimensionProfile& profile, const AlgebraType& t) {
  if (t.dim() != profile.dim())
    fail("InvalidArgument", "type " + t.str() + " has dimension " + std::to_string(t.dim()) +
                                ", profile needs " + std::to_string(profile.dim()));
  FilterReport report;
  report.type = t;
  for (FilterOutcome out : {nontrivial_grouplike_filter(t), grouplike_count_bound_filter(t),
                            stabilizer_residual_filter(profile, t),
                            p_part_quotient_filter(profile, t)}) {
    report.failures.insert(report.failures.end(), out.failures.begin(), out.failures.end());
    report.flags.insert(report.flags.end(), out.flags.begin(), out.flags.end());
  }
  report.passed = report.failures.empty();
  return report;
}

std::vector<FilterReport> screen_types(const DimensionProfile& profile, i64 g_order) {
  if (g_order < 1 || profile.dim() % g_order != 0)
    fail("InvalidArgument", "g_order must divide the profile dimension");
  std::vector<FilterReport> reports;
  for (const auto& sol : arith::enumerate_dimension_solutions(profile.dim(), g_order,
                                                              frobenius_degree_set(profile)))
    reports.push_back(screen_one(profile, AlgebraType::from_solution(sol)));
  return reports;
}

}  // namespace hopfcheck::profile
