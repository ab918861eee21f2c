#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "hopfcheck/errors.hpp"
#include "hopfcheck/fusion.hpp"

namespace hopfcheck::fusion {

namespace {

std::string id_str(i64 x) { return std::to_string(x); }

std::string row_str(i64 a, i64 b) {
  return "(" + id_str(a) + ", " + id_str(b) + ")";
}

}  // namespace

std::vector<std::string> validate_table(const FusionTable& t) {
  std::vector<std::string> issues;
  auto flag = [&](std::string msg) { issues.push_back(std::move(msg)); };

  const i64 g = t.group.order;
  const i64 n = t.n;

  try {
    t.group.validate();
  } catch (const Error& e) {
    flag(std::string("grouplike group is not a group: ") + e.what());
    return issues;
  }

  if (static_cast<i64>(t.degree.size()) != n ||
      static_cast<i64>(t.dual.size()) != n ||
      static_cast<i64>(t.action.size()) != g) {
    flag("basis arrays disagree with the declared character count");
    return issues;
  }
  for (const auto& rowvec : t.action)
    if (static_cast<i64>(rowvec.size()) != n) {
      flag("action table has a row of the wrong length");
      return issues;
    }

  for (i64 i = 0; i < g; ++i)
    if (t.degree[i] != 1) flag("grouplike id " + id_str(i) + " has degree != 1");
  i64 expect = g;
  for (const auto& cls : t.classes) {
    if (cls.start != expect)
      flag("degree class of degree " + id_str(cls.degree) +
           " does not start where the previous class ends");
    expect = cls.start + cls.size;
    for (i64 id = cls.start; id < cls.start + cls.size && id < n; ++id)
      if (t.degree[id] != cls.degree)
        flag("character " + id_str(id) + " disagrees with its class degree");
  }
  if (expect != n) flag("degree classes do not cover the basis");

  i64 dimsum = 0;
  for (i64 i = 0; i < n; ++i) dimsum += t.degree[i] * t.degree[i];
  if (dimsum != t.type.dim())
    flag("sum of squared degrees differs from the type dimension");

  for (i64 i = 0; i < n; ++i) {
    const i64 d = t.dual[i];
    if (d == kUnknown) continue;
    if (d < 0 || d >= n) {
      flag("contragredient of " + id_str(i) + " is out of range");
      continue;
    }
    if (t.degree[d] != t.degree[i])
      flag("contragredient changes the degree of " + id_str(i));
    if (t.dual[d] != i)
      flag("contragredient is not an involution at " + id_str(i));
    if (i < g && d != t.group.inverse(i))
      flag("grouplike " + id_str(i) + " has contragredient != inverse");
  }

  for (i64 e = 0; e < g; ++e) {
    for (i64 i = 0; i < n; ++i) {
      const i64 img = t.action[e][i];
      if (img == kUnknown) continue;
      if (img < 0 || img >= n) {
        flag("action image out of range at (" + id_str(e) + ", " + id_str(i) +
             ")");
        continue;
      }
      if (t.degree[img] != t.degree[i])
        flag("action of " + id_str(e) + " changes the degree of " + id_str(i));
      if (i < g && img != t.group.op(e, i))
        flag("action on grouplikes disagrees with the group law at (" +
             id_str(e) + ", " + id_str(i) + ")");
      if (e == 0 && img != i)
        flag("the unit grouplike moves character " + id_str(i));
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    bool total = true;
    for (i64 i = 0; i < n; ++i) {
      const i64 img = t.action[e][i];
      if (img == kUnknown) {
        total = false;
        continue;
      }
      if (img >= 0 && img < n) {
        if (seen[static_cast<size_t>(img)])
          flag("action of " + id_str(e) + " is not injective");
        seen[static_cast<size_t>(img)] = 1;
      }
    }
    (void)total;
  }
  for (i64 e = 0; e < g; ++e)
    for (i64 f = 0; f < g; ++f) {
      const i64 ef = t.group.op(e, f);
      for (i64 i = 0; i < n; ++i) {
        const i64 fi = t.action[f][i];
        if (fi == kUnknown || fi < 0 || fi >= n) continue;
        const i64 lhs = t.action[ef][i];
        const i64 rhs = t.action[e][fi];
        if (lhs != kUnknown && rhs != kUnknown && lhs != rhs)
          flag("action is not multiplicative at elements " + id_str(e) +
               ", " + id_str(f) + " on character " + id_str(i));
      }
    }

  for (const auto& [key, row] : t.products) {
    const auto& [a, b] = key;
    if (a < 0 || a >= n || b < 0 || b >= n ||
        static_cast<i64>(row.size()) != n) {
      flag("product row " + row_str(a, b) + " is malformed");
      continue;
    }
    i64 sum = 0;
    bool full = true;
    for (i64 c = 0; c < n; ++c) {
      const i64 m = row[c];
      if (m == kUnknown) {
        full = false;
        continue;
      }
      if (m < 0) {
        flag("negative multiplicity in row " + row_str(a, b));
        full = false;
        continue;
      }
      sum += m * t.degree[c];
    }
    const i64 target = t.degree[a] * t.degree[b];
    if (full && sum != target)
      flag("row " + row_str(a, b) + " sums to " + id_str(sum) +
           " instead of " + id_str(target));
    if (!full && sum > target)
      flag("partial row " + row_str(a, b) + " already exceeds its degree");

    if (t.is_grouplike(a) || t.is_grouplike(b)) {
      for (i64 c = 0; c < n; ++c) {
        if (row[c] == kUnknown) continue;
        const i64 synth = t.multiplicity(c, a, b);
        if (synth != kUnknown && synth != row[c])
          flag("stored row " + row_str(a, b) +
               " disagrees with the one-dimensional product structure");
      }
      continue;
    }

    for (i64 c = 0; c < g; ++c) {
      if (row[c] == kUnknown) continue;
      const i64 moved = t.action[t.group.inverse(c)][a];
      if (moved == kUnknown) continue;
      const i64 dm = t.dual[moved];
      if (dm == kUnknown) continue;
      const i64 want = (b == dm) ? 1 : 0;
      if (row[c] != want)
        flag("grouplike multiplicity in row " + row_str(a, b) +
             " violates the coset rule at " + id_str(c));
    }
  }

  auto decided = [&](i64 a, i64 b, i64 c) { return t.multiplicity(c, a, b); };

  for (const auto& [key, row] : t.products) {
    const auto& [a, b] = key;
    if (t.is_grouplike(a) || t.is_grouplike(b)) continue;
    if (static_cast<i64>(row.size()) != n) continue;
    for (i64 c = 0; c < n; ++c) {
      const i64 m = row[c];
      if (m == kUnknown) continue;

      const i64 da = t.dual[a], db = t.dual[b], dc = t.dual[c];
      if (da != kUnknown && db != kUnknown && dc != kUnknown) {
        const std::array<std::array<i64, 3>, 5> aliases{{
            {b, dc, da},
            {dc, a, db},
            {c, db, a},
            {da, c, b},
            {db, da, dc},
        }};
        for (const auto& al : aliases) {
          const i64 other = decided(al[0], al[1], al[2]);
          if (other != kUnknown && other != m)
            flag("Frobenius reciprocity fails between rows " + row_str(a, b) +
                 " and " + row_str(al[0], al[1]) + " at constituent " +
                 id_str(al[2]));
        }
      }

      for (i64 e = 1; e < g; ++e) {
        const i64 na = t.action[e][a];
        const i64 nc = t.is_grouplike(c) ? t.group.op(e, c) : t.action[e][c];
        if (na != kUnknown && nc != kUnknown) {
          const i64 other = decided(na, b, nc);
          if (other != kUnknown && other != m)
            flag("translation equivariance fails between rows " +
                 row_str(a, b) + " and " + row_str(na, b));
        }
        const i64 nb = t.right_translate(b, e);
        const i64 nc2 =
            t.is_grouplike(c) ? t.group.op(c, e) : t.right_translate(c, e);
        if (nb != kUnknown && nc2 != kUnknown) {
          const i64 other = decided(a, nb, nc2);
          if (other != kUnknown && other != m)
            flag("translation equivariance fails between rows " +
                 row_str(a, b) + " and " + row_str(a, nb));
        }
      }
    }
  }

  {
    std::vector<i64> lhs(static_cast<size_t>(n)), rhs(static_cast<size_t>(n));
    for (i64 a = g; a < n; ++a)
      for (i64 b = g; b < n; ++b) {
        if (!t.row_decided(a, b)) continue;
        for (i64 c = g; c < n; ++c) {
          if (!t.row_decided(b, c)) continue;
          std::fill(lhs.begin(), lhs.end(), 0);
          std::fill(rhs.begin(), rhs.end(), 0);
          bool known = true;
          for (i64 m = 0; m < n && known; ++m) {
            const i64 mab = decided(a, b, m);
            if (mab == kUnknown) known = false;
            if (!known || mab == 0) continue;
            for (i64 s = 0; s < n && known; ++s) {
              const i64 v = decided(m, c, s);
              if (v == kUnknown) known = false;
              else lhs[static_cast<size_t>(s)] += mab * v;
            }
          }
          for (i64 m = 0; m < n && known; ++m) {
            const i64 mbc = decided(b, c, m);
            if (mbc == kUnknown) known = false;
            if (!known || mbc == 0) continue;
            for (i64 s = 0; s < n && known; ++s) {
              const i64 v = decided(a, m, s);
              if (v == kUnknown) known = false;
              else rhs[static_cast<size_t>(s)] += mbc * v;
            }
          }
          if (known && lhs != rhs)
            flag("associativity fails for the triple (" + id_str(a) + ", " +
                 id_str(b) + ", " + id_str(c) + ")");
        }
      }
  }

  std::sort(issues.begin(), issues.end());
  issues.erase(std::unique(issues.begin(), issues.end()), issues.end());
  return issues;
}

}  // namespace hopfcheck::fusion
