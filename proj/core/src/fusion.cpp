#include "hopfcheck/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "fusion_internal.hpp"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/rules.hpp"

namespace hopfcheck::fusion {

namespace detail {

std::vector<i64> admissible_stabilizer_orders(const profile::AlgebraType& type,
                                              i64 group_order, i64 degree) {
  const i64 dd = degree * degree;
  const i64 lim = std::gcd(dd, group_order);
  std::vector<arith::CoinPart> parts;
  for (const auto& [e, cnt] : type.entries)
    if (e > 1) parts.push_back({e, cnt * e});
  std::vector<i64> out;
  for (i64 s = 1; s <= lim; ++s)
    if (lim % s == 0 && arith::coin_representable(dd - s, parts))
      out.push_back(s);
  return out;
}

bool orbit_partition_feasible(i64 class_size, i64 group_order,
                              const std::vector<i64>& stab_orders) {
  std::vector<arith::CoinPart> parts;
  for (i64 s : stab_orders)
    if (group_order % s == 0) parts.push_back({group_order / s, class_size});
  return arith::coin_representable(class_size, parts);
}

Contradiction make_contradiction(const std::string& rule_id,
                                 std::string detail) {
  const auto& info = rules::rule(rule_id);
  return Contradiction{info.id, info.citation, std::move(detail)};
}

i64 slot_cap(const FusionTable& t, i64 a, i64 b, i64 c) {
  if (t.is_grouplike(c)) return 1;
  const i64 da = t.degree[a], db = t.degree[b], dc = t.degree[c];
  return std::min({da * db / dc, db * dc / da, da * dc / db});
}

}  // namespace detail

const DegreeClass* FusionTable::class_of(i64 id) const {
  for (const auto& c : classes)
    if (id >= c.start && id < c.start + c.size) return &c;
  return nullptr;
}

i64 FusionTable::right_translate(i64 id, i64 g) const {
  if (id < 0 || id >= n || !is_grouplike(g)) return kUnknown;
  const i64 d = dual[id];
  if (d == kUnknown) return kUnknown;
  const i64 moved = action[group.inverse(g)][d];
  if (moved == kUnknown) return kUnknown;
  return dual[moved];
}

i64 FusionTable::multiplicity(i64 c, i64 a, i64 b) const {
  auto it = products.find({a, b});
  if (it != products.end() && it->second[c] != kUnknown) return it->second[c];
  if (is_grouplike(a) && is_grouplike(b)) return c == group.op(a, b) ? 1 : 0;
  if (is_grouplike(a)) {
    const i64 img = action[a][b];
    return img == kUnknown ? kUnknown : (c == img ? 1 : 0);
  }
  if (is_grouplike(b)) {
    const i64 img = right_translate(a, b);
    return img == kUnknown ? kUnknown : (c == img ? 1 : 0);
  }
  return kUnknown;
}

bool FusionTable::row_decided(i64 a, i64 b) const {
  if (is_grouplike(a) && is_grouplike(b)) return true;
  if (is_grouplike(a)) return action[a][b] != kUnknown;
  if (is_grouplike(b)) return right_translate(a, b) != kUnknown;
  auto it = products.find({a, b});
  if (it == products.end()) return false;
  return std::none_of(it->second.begin(), it->second.end(),
                      [](i64 v) { return v == kUnknown; });
}

std::optional<std::vector<i64>> FusionTable::row(i64 a, i64 b) const {
  if (!row_decided(a, b)) return std::nullopt;
  std::vector<i64> out(n, 0);
  for (i64 c = 0; c < n; ++c) out[c] = multiplicity(c, a, b);
  return out;
}

FusionTable build_skeleton(const profile::AlgebraType& type,
                           const grp::Group& group) {
  const i64 g = type.g_order();
  if (group.order != g)
    fail("GroupMismatch", "type " + type.str() + " has " + std::to_string(g) +
                              " one-dimensional characters but group '" +
                              group.name + "' has order " +
                              std::to_string(group.order));
  if (!group.is_abelian())
    fail("Unsupported",
         "the grouplike group must be abelian; '" + group.name + "' is not");

  FusionTable t;
  t.type = type;
  t.group = group;
  t.n = g;
  t.degree.assign(g, 1);
  for (const auto& [d, cnt] : type.entries) {
    if (d == 1) continue;
    t.classes.push_back({d, t.n, cnt});
    t.n += cnt;
    for (i64 i = 0; i < cnt; ++i) t.degree.push_back(d);
  }
  t.dual.assign(t.n, kUnknown);
  for (i64 i = 0; i < g; ++i) t.dual[i] = group.inverse(i);
  t.action.assign(g, std::vector<i64>(t.n, kUnknown));
  for (i64 e = 0; e < g; ++e)
    for (i64 i = 0; i < g; ++i) t.action[e][i] = group.op(e, i);
  return t;
}

namespace {

using detail::slot_cap;

std::optional<Contradiction> class_checks(const FusionTable& t) {
  for (const auto& cls : t.classes) {
    auto stabs = detail::admissible_stabilizer_orders(t.type, t.group.order,
                                                      cls.degree);
    if (stabs.empty())
      return detail::make_contradiction(
          "stabilizer-residual",
          "no admissible stabilizer order for the degree " +
              std::to_string(cls.degree) + " class: for every s dividing gcd(" +
              std::to_string(cls.degree * cls.degree) + ", " +
              std::to_string(t.group.order) + "), the residual " +
              std::to_string(cls.degree * cls.degree) +
              " - s is not a sum of available higher degrees");
    if (!detail::orbit_partition_feasible(cls.size, t.group.order, stabs)) {
      std::string lens;
      for (i64 s : stabs) {
        if (!lens.empty()) lens += ", ";
        lens += std::to_string(t.group.order / s);
      }
      return detail::make_contradiction(
          "orbit-stabilizer",
          "the degree " + std::to_string(cls.degree) + " class of size " +
              std::to_string(cls.size) +
              " cannot be partitioned into grouplike orbits of the "
              "admissible lengths {" +
              lens + "}");
    }
  }
  return std::nullopt;
}

}  // namespace

PropagateResult propagate(const FusionTable& input) {
  if (auto contra = class_checks(input)) return {std::nullopt, contra};

  FusionTable t = input;
  const i64 g = t.group.order;
  bool changed = true;
  while (changed) {
    changed = false;

    for (const auto& cls : t.classes) {
      if (cls.size != 1) continue;
      const i64 id = cls.start;
      if (t.dual[id] == kUnknown) {
        t.dual[id] = id;
        changed = true;
      }
      for (i64 e = 0; e < g; ++e)
        if (t.action[e][id] == kUnknown) {
          t.action[e][id] = id;
          changed = true;
        }
    }

    for (i64 x = 0; x < t.n; ++x) {
      const i64 y = t.dual[x];
      if (y == kUnknown) continue;
      if (t.degree[y] != t.degree[x])
        return {std::nullopt,
                detail::make_contradiction(
                    "duality-symmetry",
                    "contragredient pairs characters of unequal degree (" +
                        std::to_string(x) + " -> " + std::to_string(y) + ")")};
      if (t.dual[y] == kUnknown) {
        t.dual[y] = x;
        changed = true;
      } else if (t.dual[y] != x) {
        return {std::nullopt,
                detail::make_contradiction(
                    "duality-symmetry", "contragredient is not an involution at id " +
                                            std::to_string(x))};
      }
    }

    for (i64 i = 0; i < t.n; ++i) {
      if (t.action[0][i] == kUnknown) {
        t.action[0][i] = i;
        changed = true;
      } else if (t.action[0][i] != i) {
        return {std::nullopt,
                detail::make_contradiction(
                    "translation-equivariance",
                    "the unit grouplike must act trivially (id " +
                        std::to_string(i) + ")")};
      }
    }

    for (auto& [key, row] : t.products) {
      const auto& [a, b] = key;
      if (t.is_grouplike(a) || t.is_grouplike(b)) continue;
      const i64 target = t.degree[a] * t.degree[b];

      for (i64 c = 0; c < g; ++c) {
        const i64 moved = t.action[t.group.inverse(c)][a];
        if (moved == kUnknown) continue;
        const i64 dm = t.dual[moved];
        if (dm == kUnknown) continue;
        const i64 v = (b == dm) ? 1 : 0;
        if (row[c] == kUnknown) {
          row[c] = v;
          changed = true;
        } else if (row[c] != v) {
          return {std::nullopt,
                  detail::make_contradiction(
                      "grouplike-multiplicity",
                      "multiplicity of a grouplike in the product (" +
                          std::to_string(a) + ", " + std::to_string(b) +
                          ") contradicts the coset rule")};
        }
      }

      i64 decided = 0;
      std::vector<i64> open;
      for (i64 c = 0; c < t.n; ++c) {
        if (row[c] != kUnknown) {
          decided += row[c] * t.degree[c];
          continue;
        }
        if (slot_cap(t, a, b, c) == 0) {
          row[c] = 0;
          changed = true;
          continue;
        }
        open.push_back(c);
      }
      const i64 residual = target - decided;
      const std::string row_name =
          "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
      if (residual < 0)
        return {std::nullopt,
                detail::make_contradiction(
                    "degree-accounting",
                    "decided multiplicities in row " + row_name +
                        " already exceed the degree product")};
      if (open.empty()) {
        if (residual != 0)
          return {std::nullopt,
                  detail::make_contradiction(
                      "degree-accounting",
                      "row " + row_name + " sums to " +
                          std::to_string(target - residual) + " instead of " +
                          std::to_string(target))};
        continue;
      }
      if (residual == 0) {
        for (i64 c : open) row[c] = 0;
        changed = true;
        continue;
      }
      std::vector<arith::CoinPart> parts;
      for (i64 c : open)
        parts.push_back({t.degree[c], slot_cap(t, a, b, c)});
      if (!arith::coin_representable(residual, parts))
        return {std::nullopt,
                detail::make_contradiction(
                    "degree-accounting",
                    "row " + row_name + " cannot absorb the remaining degree " +
                        std::to_string(residual))};
      if (open.size() == 1) {
        const i64 c = open[0];
        if (residual % t.degree[c] == 0) {
          row[c] = residual / t.degree[c];
          changed = true;
        }
      }
    }
  }
  return {std::move(t), std::nullopt};
}

std::vector<std::vector<i64>> orbit_assignment(const FusionTable& table,
                                               i64 degree) {
  const DegreeClass* cls = nullptr;
  for (const auto& c : table.classes)
    if (c.degree == degree) cls = &c;
  if (!cls)
    fail("InvalidArgument",
         "no class of degree " + std::to_string(degree) + " in type " +
             table.type.str());
  const i64 g = table.group.order;
  const i64 dd = degree * degree;
  std::vector<i64> lens;
  for (i64 l = 1; l <= g; ++l)
    if (g % l == 0 && dd % (g / l) == 0) lens.push_back(l);

  std::vector<std::vector<i64>> out;
  std::vector<i64> cur;
  auto rec = [&](auto&& self, i64 remaining, size_t from) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (size_t i = from; i < lens.size(); ++i) {
      if (lens[i] > remaining) break;
      cur.push_back(lens[i]);
      self(self, remaining - lens[i], i);
      cur.pop_back();
    }
  };
  rec(rec, cls->size, 0);
  return out;
}

StabilizerResult stabilizer_of(const FusionTable& table, i64 chi) {
  if (chi < 0 || chi >= table.n)
    fail("InvalidArgument", "character id out of range");
  StabilizerResult res;
  for (i64 e = 0; e < table.group.order; ++e) {
    const i64 img = table.action[e][chi];
    if (img == kUnknown)
      fail("Unassigned", "the action of element " + std::to_string(e) +
                             " on character " + std::to_string(chi) +
                             " is undecided");
    if (img == chi) res.elements.push_back(e);
  }
  const i64 dd = table.degree[chi] * table.degree[chi];
  const i64 s = static_cast<i64>(res.elements.size());
  res.consistent = std::gcd(dd, table.group.order) % s == 0;
  return res;
}

ClosureResult standard_subalgebra_closure(const FusionTable& table,
                                          const std::vector<i64>& seeds) {
  std::set<i64> mem(seeds.begin(), seeds.end());
  for (i64 x : mem)
    if (x < 0 || x >= table.n) fail("InvalidArgument", "seed id out of range");

  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<i64> snapshot(mem.begin(), mem.end());
    for (i64 x : snapshot) {
      if (table.dual[x] == kUnknown) return {false, 0, {}};
      if (mem.insert(table.dual[x]).second) grew = true;
    }
    for (i64 a : snapshot)
      for (i64 b : snapshot) {
        if (!table.row_decided(a, b)) return {false, 0, {}};
        for (i64 c = 0; c < table.n; ++c)
          if (table.multiplicity(c, a, b) > 0 && mem.insert(c).second)
            grew = true;
      }
  }

  ClosureResult res;
  res.complete = true;
  res.members.assign(mem.begin(), mem.end());
  for (i64 x : res.members) res.dimension += table.degree[x] * table.degree[x];
  return res;
}

std::vector<std::pair<i64, i64>> default_focus(const FusionTable& table) {
  std::vector<i64> ids;
  const size_t k = table.classes.size();
  for (size_t i = (k >= 2 ? k - 2 : 0); i < k; ++i)
    for (i64 j = 0; j < table.classes[i].size; ++j)
      ids.push_back(table.classes[i].start + j);
  std::vector<std::pair<i64, i64>> rows;
  for (i64 a : ids)
    for (i64 b : ids) rows.push_back({a, b});
  return rows;
}

}  // namespace hopfcheck::fusion
