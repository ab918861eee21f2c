#include "hopfcheck/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "hopfcheck/arithmetic.hpp"
#include "hopfcheck/errors.hpp"

namespace hopfcheck::grp {

int Group::inverse(int a) const {
  for (int b = 0; b < order; ++b)
    if (op(a, b) == 0) return b;
  fail("InvalidArgument", "element has no inverse; not a group table");
}

int Group::element_order(int a) const {
  int x = a, n = 1;
  while (x != 0) {
    x = op(x, a);
    ++n;
  }
  return n;
}

bool Group::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

void Group::validate() const {
  if (order < 1 || table.size() != static_cast<size_t>(order) * order)
    fail("InvalidArgument", "bad table size for group " + name);
  for (int v : table)
    if (v < 0 || v >= order) fail("InvalidArgument", "table entry out of range in " + name);
  for (int a = 0; a < order; ++a)
    if (op(0, a) != a || op(a, 0) != a)
      fail("InvalidArgument", "element 0 is not an identity in " + name);
  for (int a = 0; a < order; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < order; ++b) has_inverse |= op(a, b) == 0;
    if (!has_inverse) fail("InvalidArgument", "missing inverse in " + name);
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          fail("InvalidArgument", "associativity fails in " + name);
}

Group trivial_group() { return Group{"C1", 1, {0}}; }

Group cyclic(int n) {
  if (n < 1) fail("InvalidArgument", "cyclic order must be >= 1");
  Group g{"C" + std::to_string(n), n, {}};
  g.table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return g;
}

Group direct_product(const Group& a, const Group& b) {
  Group g{a.name + "x" + b.name, a.order * b.order, {}};
  const int n = g.order;
  g.table.resize(static_cast<size_t>(n) * n);
  auto idx = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          g.table[static_cast<size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
              idx(a.op(x1, x2), b.op(y1, y2));
  return g;
}

Group dihedral(int n) {
  if (n < 1) fail("InvalidArgument", "dihedral parameter must be >= 1");
  Group g{"D" + std::to_string(n), 2 * n, {}};
  const int ord = 2 * n;
  g.table.resize(static_cast<size_t>(ord) * ord);
  auto idx = [&](int i, int s) { return i + n * s; };
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < n; ++j)
        for (int t = 0; t < 2; ++t) {
          const int rot = s == 0 ? (i + j) % n : ((i - j) % n + n) % n;
          g.table[static_cast<size_t>(idx(i, s)) * ord + idx(j, t)] = idx(rot, (s + t) % 2);
        }
  return g;
}

Group dicyclic(int n) {
  if (n < 1) fail("InvalidArgument", "dicyclic parameter must be >= 1");
  const int m = 2 * n, ord = 4 * n;
  Group g{"Dic" + std::to_string(n), ord, {}};
  g.table.resize(static_cast<size_t>(ord) * ord);
  auto idx = [&](int i, int s) { return i + m * s; };
  auto mod = [&](int v) { return ((v % m) + m) % m; };
  for (int i = 0; i < m; ++i)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < m; ++j)
        for (int t = 0; t < 2; ++t) {
          int r, u;
          if (s == 0) {
            r = mod(i + j);
            u = t;
          } else if (t == 0) {
            r = mod(i - j);
            u = 1;
          } else {
            r = mod(i - j + n);  // b^2 = a^n
            u = 0;
          }
          g.table[static_cast<size_t>(idx(i, s)) * ord + idx(j, t)] = idx(r, u);
        }
  return g;
}

Group semidirect_cyclic(int a, int b, int k) {
  // power of k must have order dividing b in (Z/a)*
  i64 kk = 1;
  for (int i = 0; i < b; ++i) kk = (kk * k) % a;
  if (kk != 1 % a) fail("InvalidArgument", "k^b != 1 mod a in semidirect_cyclic");
  const int ord = a * b;
  Group g{"C" + std::to_string(a) + "sd" + std::to_string(k) + "C" + std::to_string(b), ord, {}};
  g.table.resize(static_cast<size_t>(ord) * ord);
  std::vector<i64> kpow(static_cast<size_t>(b), 1);
  for (int i = 1; i < b; ++i) kpow[static_cast<size_t>(i)] = (kpow[static_cast<size_t>(i) - 1] * k) % a;
  auto idx = [&](int x, int y) { return x + a * y; };
  for (int x1 = 0; x1 < a; ++x1)
    for (int y1 = 0; y1 < b; ++y1)
      for (int x2 = 0; x2 < a; ++x2)
        for (int y2 = 0; y2 < b; ++y2)
          g.table[static_cast<size_t>(idx(x1, y1)) * ord + idx(x2, y2)] =
              idx(static_cast<int>((x1 + kpow[static_cast<size_t>(y1)] * x2) % a), (y1 + y2) % b);
  return g;
}

namespace {

std::array<int, 4> perm_compose(const std::array<int, 4>& f, const std::array<int, 4>& g) {
  // (f*g)(x) = f(g(x))
  return {f[g[0]], f[g[1]], f[g[2]], f[g[3]]};
}

bool perm_even(const std::array<int, 4>& p) {
  int inv = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
  return inv % 2 == 0;
}

/** Quotient of g by a central subgroup (given as a sorted element list). */
Group quotient_by_central(const Group& g, const std::vector<int>& sub, const std::string& name) {
  std::vector<int> rep(static_cast<size_t>(g.order), -1);
  std::vector<int> canon;
  for (int x = 0; x < g.order; ++x) {
    if (rep[static_cast<size_t>(x)] != -1) continue;
    canon.push_back(x);
    for (int z : sub) rep[static_cast<size_t>(g.op(z, x))] = static_cast<int>(canon.size()) - 1;
  }
  const int ord = static_cast<int>(canon.size());
  Group q{name, ord, {}};
  q.table.resize(static_cast<size_t>(ord) * ord);
  for (int i = 0; i < ord; ++i)
    for (int j = 0; j < ord; ++j)
      q.table[static_cast<size_t>(i) * ord + j] = rep[static_cast<size_t>(g.op(canon[static_cast<size_t>(i)], canon[static_cast<size_t>(j)]))];
  // ensure identity sits at index 0
  if (rep[0] != 0) fail("InvalidArgument", "central quotient did not keep identity first");
  return q;
}

}  // namespace

Group alternating4() {
  std::vector<std::array<int, 4>> elems;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    if (perm_even(p)) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // identity is the first permutation in lexicographic order
  const int ord = static_cast<int>(elems.size());
  Group g{"A4", ord, {}};
  g.table.resize(static_cast<size_t>(ord) * ord);
  auto find = [&](const std::array<int, 4>& x) {
    return static_cast<int>(std::find(elems.begin(), elems.end(), x) - elems.begin());
  };
  for (int i = 0; i < ord; ++i)
    for (int j = 0; j < ord; ++j)
      g.table[static_cast<size_t>(i) * ord + j] = find(perm_compose(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]));
  return g;
}

Group pauli16() {
  // (D4 x C4) / <(r^2, c^2)>; r^2 is element 2 of dihedral(4), c^2 element 2 of C4
  Group prod = direct_product(dihedral(4), cyclic(4));
  const int z = 2 * 4 + 2;  // (r^2, c^2) under idx = d*4 + c
  Group q = quotient_by_central(prod, {0, z}, "Pauli16");
  return q;
}

Group semidirect_v4_c4() {
  const int ord = 16;
  Group g{"V4sdC4", ord, {}};
  g.table.resize(static_cast<size_t>(ord) * ord);
  auto swp = [](int n, int times) {
    if (times % 2 == 0) return n;
    return ((n & 1) << 1) | ((n >> 1) & 1);
  };
  auto idx = [](int n, int h) { return n + 4 * h; };
  for (int n1 = 0; n1 < 4; ++n1)
    for (int h1 = 0; h1 < 4; ++h1)
      for (int n2 = 0; n2 < 4; ++n2)
        for (int h2 = 0; h2 < 4; ++h2)
          g.table[static_cast<size_t>(idx(n1, h1)) * ord + idx(n2, h2)] =
              idx(n1 ^ swp(n2, h1), (h1 + h2) % 4);
  return g;
}

Group semidirect_c4_c4() {
  const int ord = 16;
  Group g{"C4sdC4", ord, {}};
  g.table.resize(static_cast<size_t>(ord) * ord);
  auto idx = [](int x, int y) { return x + 4 * y; };
  for (int x1 = 0; x1 < 4; ++x1)
    for (int y1 = 0; y1 < 4; ++y1)
      for (int x2 = 0; x2 < 4; ++x2)
        for (int y2 = 0; y2 < 4; ++y2) {
          const int eff = y1 % 2 == 0 ? x2 : (4 - x2) % 4;
          g.table[static_cast<size_t>(idx(x1, y1)) * ord + idx(x2, y2)] =
              idx((x1 + eff) % 4, (y1 + y2) % 4);
        }
  return g;
}

std::vector<Group> small_group_catalog(int max_order) {
  if (max_order > 16) fail("InvalidArgument", "catalog covers orders <= 16 only");
  std::vector<Group> out;
  auto add = [&](Group g, const std::string& name = "") {
    if (!name.empty()) g.name = name;
    if (g.order <= max_order) out.push_back(std::move(g));
  };
  add(trivial_group());
  add(cyclic(2));
  add(cyclic(3));
  add(cyclic(4));
  add(direct_product(cyclic(2), cyclic(2)), "C2xC2");
  add(cyclic(5));
  add(cyclic(6));
  add(dihedral(3), "S3");
  add(cyclic(7));
  add(cyclic(8));
  add(direct_product(cyclic(4), cyclic(2)), "C4xC2");
  add(direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)), "C2xC2xC2");
  add(dihedral(4), "D4");
  add(dicyclic(2), "Q8");
  add(cyclic(9));
  add(direct_product(cyclic(3), cyclic(3)), "C3xC3");
  add(cyclic(10));
  add(dihedral(5), "D5");
  add(cyclic(11));
  add(cyclic(12));
  add(direct_product(cyclic(6), cyclic(2)), "C6xC2");
  add(dihedral(6), "D6");
  add(alternating4(), "A4");
  add(dicyclic(3), "Dic3");
  add(cyclic(13));
  add(cyclic(14));
  add(dihedral(7), "D7");
  add(cyclic(15));
  add(cyclic(16));
  add(direct_product(cyclic(4), cyclic(4)), "C4xC4");
  add(direct_product(cyclic(8), cyclic(2)), "C8xC2");
  add(direct_product(direct_product(cyclic(4), cyclic(2)), cyclic(2)), "C4xC2xC2");
  add(direct_product(direct_product(cyclic(2), cyclic(2)), direct_product(cyclic(2), cyclic(2))), "C2xC2xC2xC2");
  add(dihedral(8), "D8");
  add(semidirect_cyclic(8, 2, 3), "QD16");
  add(semidirect_cyclic(8, 2, 5), "M16");
  add(dicyclic(4), "Q16");
  add(direct_product(dihedral(4), cyclic(2)), "D4xC2");
  add(direct_product(dicyclic(2), cyclic(2)), "Q8xC2");
  add(pauli16(), "Pauli16");
  add(semidirect_v4_c4(), "V4sdC4");
  add(semidirect_c4_c4(), "C4sdC4");
  return out;
}

namespace {

void partitions_of(int n, int max_part, std::vector<int>& acc,
                   std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(acc);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    acc.push_back(k);
    partitions_of(n - k, k, acc, out);
    acc.pop_back();
  }
}

}  // namespace

Group abelian_from_factors(const std::vector<int>& factors) {
  Group g = trivial_group();
  for (int f : factors) g = f == 1 ? g : direct_product(g, cyclic(f));
  // direct_product with trivial keeps a "C1x" prefix in names; rebuild the name
  // as the invariant factor decomposition.
  std::vector<i64> invariant;
  std::map<i64, std::vector<int>> by_prime;  // prime -> prime-power parts, descending
  for (int f : factors) {
    i64 m = f;
    for (i64 p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        i64 part = 1;
        while (m % p == 0) {
          part *= p;
          m /= p;
        }
        by_prime[p].push_back(static_cast<int>(part));
      }
    if (m > 1) by_prime[m].push_back(static_cast<int>(m));
  }
  for (auto& [p, parts] : by_prime) std::sort(parts.rbegin(), parts.rend());
  size_t rounds = 0;
  for (auto& [p, parts] : by_prime) rounds = std::max(rounds, parts.size());
  for (size_t i = 0; i < rounds; ++i) {
    i64 d = 1;
    for (auto& [p, parts] : by_prime)
      if (i < parts.size()) d *= parts[i];
    invariant.push_back(d);
  }
  std::string name;
  if (invariant.empty()) name = "C1";
  for (size_t i = 0; i < invariant.size(); ++i)
    name += (i ? "x" : "") + ("C" + std::to_string(invariant[i]));
  g.name = name;
  return g;
}

std::vector<Group> abelian_groups_of_order(i64 n) {
  if (n < 1) fail("InvalidArgument", "order must be >= 1");
  // prime factorization
  std::vector<std::pair<i64, int>> fact;
  i64 m = n;
  for (i64 p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      fact.emplace_back(p, e);
    }
  if (m > 1) fact.emplace_back(m, 1);

  std::vector<std::vector<std::vector<int>>> per_prime;  // per prime: partitions as factor lists
  for (auto [p, e] : fact) {
    std::vector<std::vector<int>> parts;
    std::vector<int> acc;
    partitions_of(e, e, acc, parts);
    std::vector<std::vector<int>> factors;
    for (auto& part : parts) {
      std::vector<int> fs;
      for (int exp : part) {
        i64 pk = 1;
        for (int i = 0; i < exp; ++i) pk *= p;
        fs.push_back(static_cast<int>(pk));
      }
      factors.push_back(std::move(fs));
    }
    per_prime.push_back(std::move(factors));
  }

  std::vector<Group> out;
  std::vector<size_t> pick(per_prime.size(), 0);
  while (true) {
    std::vector<int> factors;
    for (size_t i = 0; i < per_prime.size(); ++i)
      for (int f : per_prime[i][pick[i]]) factors.push_back(f);
    out.push_back(abelian_from_factors(factors));
    size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < per_prime[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return out;
}

std::vector<int> generated_subgroup(const Group& g, const std::vector<int>& gens) {
  std::set<int> seen{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : gens) {
        const int y = g.op(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> abelian_generators(const Group& g) {
  std::vector<int> gens;
  std::vector<int> have{0};
  while (static_cast<int>(have.size()) < g.order) {
    int best = -1, best_ord = 0;
    for (int x = 0; x < g.order; ++x) {
      if (std::binary_search(have.begin(), have.end(), x)) continue;
      const int o = g.element_order(x);
      if (o > best_ord) {
        best = x;
        best_ord = o;
      }
    }
    gens.push_back(best);
    have = generated_subgroup(g, gens);
  }
  return gens;
}

}  // namespace hopfcheck::grp
