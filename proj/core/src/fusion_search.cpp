#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fusion_internal.hpp"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/fusion.hpp"
#include "hopfcheck/rules.hpp"

namespace hopfcheck::fusion {

namespace {

using detail::admissible_stabilizer_orders;
using detail::make_contradiction;
using detail::slot_cap;

struct BudgetExhausted {};

enum class Status { Found, Exhausted };

/** Subset-sum reachability as a bitset over [0, limit]. */
struct SumBits {
  std::vector<uint64_t> w;
  i64 limit = -1;

  void reset(i64 lim) {
    limit = lim;
    w.assign(static_cast<size_t>(lim / 64) + 1, 0);
  }
  void set(i64 v) { w[static_cast<size_t>(v >> 6)] |= uint64_t{1} << (v & 63); }
  bool test(i64 v) const {
    if (v < 0 || v > limit) return false;
    return (w[static_cast<size_t>(v >> 6)] >> (v & 63)) & 1;
  }
  void mask_tail() {
    const i64 used = (limit & 63) + 1;
    if (used < 64) w.back() &= (uint64_t{1} << used) - 1;
  }
};

/** dst |= src << k, truncated to dst.limit. dst and src must differ. */
void shift_or(SumBits& dst, const SumBits& src, i64 k) {
  if (k > dst.limit) return;
  const i64 ws = k >> 6, bs = k & 63;
  const i64 nw = static_cast<i64>(dst.w.size());
  for (i64 i = nw - 1; i >= ws; --i) {
    uint64_t v = src.w[static_cast<size_t>(i - ws)] << bs;
    if (bs && i - ws - 1 >= 0)
      v |= src.w[static_cast<size_t>(i - ws - 1)] >> (64 - bs);
    dst.w[static_cast<size_t>(i)] |= v;
  }
  dst.mask_tail();
}

/** out = reachable sums of src plus coeff * v over live values of dom. */
void apply_term(const SumBits& src, SumBits& out, i64 coeff,
                const std::vector<char>& dom) {
  out.reset(src.limit);
  for (size_t v = 0; v < dom.size(); ++v)
    if (dom[v]) shift_or(out, src, coeff * static_cast<i64>(v));
}

/** out = { x + y : A.test(x), B.test(y) }, truncated. */
void convolve(const SumBits& A, const SumBits& B, SumBits& out) {
  out.reset(A.limit);
  for (i64 v = 0; v <= A.limit; ++v)
    if (A.test(v)) shift_or(out, B, v);
}

struct VarSys {
  i64 n = 0;

  std::vector<i64> keys;
  std::unordered_map<i64, int> index;
  std::vector<int> parent;
  std::vector<i64> caps;

  struct Term {
    int root;
    i64 coeff;
  };
  struct Row {
    i64 a = 0, b = 0, target = 0;
    std::vector<Term> gl, hi;
    std::vector<i64> mass_allowed;
  };
  std::vector<Row> rows;
  std::map<std::pair<i64, i64>, int> row_of;

  std::vector<std::vector<char>> dom;
  std::vector<i64> live;
  std::vector<std::vector<int>> var_rows;
  std::vector<int> var_order;

  std::vector<std::pair<int, int>> trail;

  i64 key_of(i64 a, i64 b, i64 c) const { return (a * n + b) * n + c; }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    parent[y] = x;
  }

  bool remove_value(int root, int v, std::vector<int>* changed) {
    if (!dom[static_cast<size_t>(root)][static_cast<size_t>(v)]) return true;
    dom[static_cast<size_t>(root)][static_cast<size_t>(v)] = 0;
    --live[static_cast<size_t>(root)];
    trail.push_back({root, v});
    if (changed) changed->push_back(root);
    return live[static_cast<size_t>(root)] > 0;
  }

  bool restrict_to(int root, i64 v, std::vector<int>* changed) {
    auto& d = dom[static_cast<size_t>(root)];
    if (v < 0 || v >= static_cast<i64>(d.size()) || !d[static_cast<size_t>(v)])
      return false;
    for (i64 u = 0; u < static_cast<i64>(d.size()); ++u)
      if (u != v && d[static_cast<size_t>(u)])
        remove_value(root, static_cast<int>(u), changed);
    return true;
  }

  i64 single_value(int root) const {
    const auto& d = dom[static_cast<size_t>(root)];
    for (size_t v = 0; v < d.size(); ++v)
      if (d[v]) return static_cast<i64>(v);
    return kUnknown;
  }

  void undo_to(size_t mark) {
    while (trail.size() > mark) {
      auto [root, v] = trail.back();
      trail.pop_back();
      dom[static_cast<size_t>(root)][static_cast<size_t>(v)] = 1;
      ++live[static_cast<size_t>(root)];
    }
  }
};

struct Searcher {
  profile::AlgebraType type;
  grp::Group group;
  SearchOptions opts;
  i64 dim = 0;
  std::vector<std::pair<i64, i64>> focus;
  std::vector<std::vector<i64>> SS;
  std::vector<i64> gens;
  SearchStats stats;
  std::optional<Contradiction> root_contra;
  std::optional<FusionTable> witness;
  std::vector<char> distinguished;

  void bump_node(int depth) {
    ++stats.nodes;
    stats.max_depth = std::max<i64>(stats.max_depth, depth);
    if (stats.nodes > opts.node_budget) throw BudgetExhausted{};
  }

  void maybe_shuffle(std::vector<i64>& v, uint64_t salt) const {
    if (opts.order_seed == 0 || v.size() < 2) return;
    std::mt19937_64 rng(static_cast<uint64_t>(opts.order_seed) *
                            0x9E3779B97F4A7C15ULL ^
                        salt);
    for (size_t i = v.size() - 1; i > 0; --i)
      std::swap(v[i], v[static_cast<size_t>(rng() % (i + 1))]);
  }

  size_t class_index(const FusionTable& t, i64 id) const {
    for (size_t ci = 0; ci < t.classes.size(); ++ci)
      if (id >= t.classes[ci].start &&
          id < t.classes[ci].start + t.classes[ci].size)
        return ci;
    fail("InvalidArgument", "id outside every degree class");
  }

  bool build_system(const FusionTable& t, VarSys& sys, Contradiction* contra);
  bool fixpoint(const FusionTable& t, VarSys& sys, std::deque<int> queue,
                bool check_closures, Contradiction* contra);
  bool filter_row(VarSys& sys, const VarSys::Row& row,
                  std::vector<int>* changed, Contradiction* contra);
  bool closure_checks(const FusionTable& t, VarSys& sys, Contradiction* contra);
  i64 mult_of(const FusionTable& t, VarSys& sys, i64 a, i64 b, i64 c);
  bool associativity_ok(const FusionTable& t, VarSys& sys);

  Status dfs(FusionTable& t, int depth);
  Status assign_block(FusionTable& t, size_t ci, size_t gi, int depth);
  Status mult_dfs(const FusionTable& t, VarSys& sys, int depth);
  bool finalize_structure(FusionTable& t);
  FusionTable assemble(const FusionTable& t, VarSys& sys) const;
};

bool Searcher::build_system(const FusionTable& t, VarSys& sys,
                            Contradiction* contra) {
  ++stats.propagations;
  const i64 n = t.n, g = t.group.order;
  sys.n = n;

  auto add_row = [&](i64 a, i64 b) {
    if (sys.row_of.count({a, b})) return;
    const int ridx = static_cast<int>(sys.rows.size());
    sys.row_of[{a, b}] = ridx;
    VarSys::Row r;
    r.a = a;
    r.b = b;
    r.target = t.degree[a] * t.degree[b];
    sys.rows.push_back(std::move(r));
    for (i64 c = 0; c < n; ++c) {
      const i64 k = sys.key_of(a, b, c);
      const int idx = static_cast<int>(sys.keys.size());
      sys.keys.push_back(k);
      sys.index.emplace(k, idx);
      sys.parent.push_back(idx);
      sys.caps.push_back(slot_cap(t, a, b, c));
    }
  };

  for (const auto& [a, b] : focus) add_row(a, b);

  for (size_t si = 0; si < sys.keys.size(); ++si) {
    const i64 k = sys.keys[si];
    const i64 c = k % n, b = (k / n) % n, a = k / (n * n);

    if (!t.is_grouplike(c)) {
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
          if (t.is_grouplike(al[0]) || t.is_grouplike(al[1])) continue;
          add_row(al[0], al[1]);
          sys.unite(static_cast<int>(si),
                    sys.index.at(sys.key_of(al[0], al[1], al[2])));
        }
      }
    }

    for (i64 e = 1; e < g; ++e) {
      const i64 na = t.action[e][a];
      const i64 nc = t.is_grouplike(c) ? t.group.op(e, c) : t.action[e][c];
      if (na != kUnknown && nc != kUnknown) {
        add_row(na, b);
        sys.unite(static_cast<int>(si), sys.index.at(sys.key_of(na, b, nc)));
      }
      const i64 nb = t.right_translate(b, e);
      const i64 nc2 = t.is_grouplike(c) ? t.group.op(c, e)
                                        : t.right_translate(c, e);
      if (nb != kUnknown && nc2 != kUnknown) {
        add_row(a, nb);
        sys.unite(static_cast<int>(si), sys.index.at(sys.key_of(a, nb, nc2)));
      }
      const i64 na2 = t.right_translate(a, e);
      const i64 nb2 = t.action[t.group.inverse(e)][b];
      if (na2 != kUnknown && nb2 != kUnknown) {
        add_row(na2, nb2);
        sys.unite(static_cast<int>(si), sys.index.at(sys.key_of(na2, nb2, c)));
      }
    }
  }

  const size_t ns = sys.keys.size();
  for (size_t si = 0; si < ns; ++si) {
    const int root = sys.find(static_cast<int>(si));
    sys.caps[static_cast<size_t>(root)] =
        std::min(sys.caps[static_cast<size_t>(root)], sys.caps[si]);
  }
  sys.dom.resize(ns);
  sys.live.assign(ns, 0);
  for (size_t si = 0; si < ns; ++si) {
    if (sys.find(static_cast<int>(si)) != static_cast<int>(si)) continue;
    sys.dom[si].assign(static_cast<size_t>(sys.caps[si]) + 1, 1);
    sys.live[si] = sys.caps[si] + 1;
  }

  for (size_t si = 0; si < ns; ++si) {
    const i64 k = sys.keys[si];
    const i64 c = k % n, b = (k / n) % n, a = k / (n * n);
    if (!t.is_grouplike(c)) continue;
    i64 forced = kUnknown;
    if (t.degree[a] != t.degree[b]) {
      forced = 0;
    } else {
      const i64 moved = t.action[t.group.inverse(c)][a];
      if (moved != kUnknown && t.dual[moved] != kUnknown)
        forced = (b == t.dual[moved]) ? 1 : 0;
    }
    if (forced == kUnknown) continue;
    if (!sys.restrict_to(sys.find(static_cast<int>(si)), forced, nullptr)) {
      *contra = make_contradiction(
          "grouplike-multiplicity",
          "grouplike multiplicity in row (" + std::to_string(a) + ", " +
              std::to_string(b) + ") conflicts with the coset rule");
      return false;
    }
  }

  sys.var_rows.assign(ns, {});
  for (size_t ri = 0; ri < sys.rows.size(); ++ri) {
    auto& row = sys.rows[ri];
    std::map<int, i64> gl, hi;
    for (i64 c = 0; c < n; ++c) {
      const int root =
          sys.find(sys.index.at(sys.key_of(row.a, row.b, c)));
      if (t.is_grouplike(c))
        gl[root] += 1;
      else
        hi[root] += t.degree[c];
    }
    for (const auto& [root, coeff] : gl) row.gl.push_back({root, coeff});
    for (const auto& [root, coeff] : hi) row.hi.push_back({root, coeff});
    for (const auto& [root, coeff] : gl)
      sys.var_rows[static_cast<size_t>(root)].push_back(static_cast<int>(ri));
    for (const auto& [root, coeff] : hi)
      sys.var_rows[static_cast<size_t>(root)].push_back(static_cast<int>(ri));

    if (t.degree[row.a] != t.degree[row.b]) {
      row.mass_allowed = {0};
    } else {
      const auto& ss = SS[class_index(t, row.a)];
      if (t.dual[row.a] == row.b) {
        row.mass_allowed = ss;
      } else {
        row.mass_allowed = {0};
        row.mass_allowed.insert(row.mass_allowed.end(), ss.begin(), ss.end());
      }
    }
  }

  std::deque<int> all(sys.rows.size());
  std::iota(all.begin(), all.end(), 0);
  if (!fixpoint(t, sys, std::move(all), true, contra)) return false;

  std::vector<std::pair<std::pair<i64, i64>, int>> order;
  for (size_t si = 0; si < ns; ++si) {
    if (sys.find(static_cast<int>(si)) != static_cast<int>(si)) continue;
    i64 best = std::numeric_limits<i64>::max();
    for (int ri : sys.var_rows[si]) best = std::min(best, sys.rows[ri].target);
    if (sys.var_rows[si].empty()) best = std::numeric_limits<i64>::max();
    order.push_back({{best, sys.keys[si]}, static_cast<int>(si)});
  }
  std::sort(order.begin(), order.end());
  for (const auto& [prio, root] : order) sys.var_order.push_back(root);
  return true;
}

bool Searcher::filter_row(VarSys& sys, const VarSys::Row& row,
                          std::vector<int>* changed, Contradiction* contra) {
  const i64 T = row.target;
  const std::string row_name =
      "(" + std::to_string(row.a) + ", " + std::to_string(row.b) + ")";

  auto build_chain = [&](const std::vector<VarSys::Term>& terms, i64 limit,
                         std::vector<SumBits>& F, std::vector<SumBits>& B) {
    F.assign(terms.size() + 1, {});
    B.assign(terms.size() + 1, {});
    F[0].reset(limit);
    F[0].set(0);
    for (size_t i = 0; i < terms.size(); ++i)
      apply_term(F[i], F[i + 1], terms[i].coeff,
                 sys.dom[static_cast<size_t>(terms[i].root)]);
    B[terms.size()].reset(limit);
    B[terms.size()].set(0);
    for (size_t i = terms.size(); i-- > 0;)
      apply_term(B[i + 1], B[i], terms[i].coeff,
                 sys.dom[static_cast<size_t>(terms[i].root)]);
  };

  i64 gl_max = 0;
  for (const auto& term : row.gl) gl_max += term.coeff;
  std::vector<SumBits> GF, GB, HF, HB;
  build_chain(row.gl, std::min<i64>(T, gl_max), GF, GB);
  build_chain(row.hi, T, HF, HB);
  const SumBits& G_all = GF[row.gl.size()];
  const SumBits& H_all = HF[row.hi.size()];

  bool feasible = false;
  for (i64 m : row.mass_allowed)
    if (G_all.test(m) && H_all.test(T - m)) {
      feasible = true;
      break;
    }
  if (!feasible) {
    *contra = make_contradiction(
        "degree-accounting",
        "row " + row_name +
            " admits no decomposition: no allowed grouplike mass leaves a "
            "residual expressible in the available degrees");
    return false;
  }

  SumBits W;
  for (size_t i = 0; i < row.gl.size(); ++i) {
    const int root = row.gl[i].root;
    const i64 coeff = row.gl[i].coeff;
    auto& d = sys.dom[static_cast<size_t>(root)];
    convolve(GF[i], GB[i + 1], W);
    for (i64 v = 0; v < static_cast<i64>(d.size()); ++v) {
      if (!d[static_cast<size_t>(v)]) continue;
      bool ok = false;
      for (i64 m : row.mass_allowed)
        if (W.test(m - coeff * v) && H_all.test(T - m)) {
          ok = true;
          break;
        }
      if (!ok && !sys.remove_value(root, static_cast<int>(v), changed)) {
        *contra = make_contradiction(
            "degree-accounting",
            "row " + row_name + " forces an empty multiplicity domain");
        return false;
      }
    }
  }
  for (size_t i = 0; i < row.hi.size(); ++i) {
    const int root = row.hi[i].root;
    const i64 coeff = row.hi[i].coeff;
    auto& d = sys.dom[static_cast<size_t>(root)];
    convolve(HF[i], HB[i + 1], W);
    for (i64 v = 0; v < static_cast<i64>(d.size()); ++v) {
      if (!d[static_cast<size_t>(v)]) continue;
      bool ok = false;
      for (i64 m : row.mass_allowed)
        if (G_all.test(m) && W.test(T - m - coeff * v)) {
          ok = true;
          break;
        }
      if (!ok && !sys.remove_value(root, static_cast<int>(v), changed)) {
        *contra = make_contradiction(
            "degree-accounting",
            "row " + row_name + " forces an empty multiplicity domain");
        return false;
      }
    }
  }
  return true;
}

bool Searcher::fixpoint(const FusionTable& t, VarSys& sys,
                        std::deque<int> queue, bool check_closures,
                        Contradiction* contra) {
  std::vector<char> inq(sys.rows.size(), 0);
  for (int r : queue) inq[static_cast<size_t>(r)] = 1;
  bool shrunk = false;
  while (!queue.empty()) {
    const int r = queue.front();
    queue.pop_front();
    inq[static_cast<size_t>(r)] = 0;
    std::vector<int> changed;
    if (!filter_row(sys, sys.rows[static_cast<size_t>(r)], &changed, contra))
      return false;
    for (int root : changed) {
      shrunk = true;
      for (int ri : sys.var_rows[static_cast<size_t>(root)])
        if (!inq[static_cast<size_t>(ri)]) {
          inq[static_cast<size_t>(ri)] = 1;
          queue.push_back(ri);
        }
    }
  }
  if (check_closures || shrunk) return closure_checks(t, sys, contra);
  return true;
}

i64 Searcher::mult_of(const FusionTable& t, VarSys& sys, i64 a, i64 b,
                      i64 c) {
  if (t.is_grouplike(a) && t.is_grouplike(b))
    return c == t.group.op(a, b) ? 1 : 0;
  if (t.is_grouplike(a)) {
    const i64 img = t.action[a][b];
    return img == kUnknown ? kUnknown : (c == img ? 1 : 0);
  }
  if (t.is_grouplike(b)) {
    const i64 img = t.right_translate(a, b);
    return img == kUnknown ? kUnknown : (c == img ? 1 : 0);
  }
  auto it = sys.row_of.find({a, b});
  if (it == sys.row_of.end()) return kUnknown;
  const int root = sys.find(sys.index.at(sys.key_of(a, b, c)));
  if (sys.live[static_cast<size_t>(root)] != 1) return kUnknown;
  return sys.single_value(root);
}

bool Searcher::associativity_ok(const FusionTable& t, VarSys& sys) {
  const i64 g = t.group.order;
  std::vector<i64> lhs(static_cast<size_t>(t.n)), rhs(static_cast<size_t>(t.n));
  for (i64 a = g; a < t.n; ++a)
    for (i64 b = g; b < t.n; ++b) {
      if (!sys.row_of.count({a, b})) continue;
      for (i64 c = g; c < t.n; ++c) {
        if (!sys.row_of.count({b, c})) continue;
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        bool known = true;
        for (i64 m = 0; m < t.n && known; ++m) {
          const i64 mab = mult_of(t, sys, a, b, m);
          if (mab == kUnknown) known = false;
          if (!known || mab == 0) continue;
          if (t.is_grouplike(m)) {
            const i64 img = t.action[m][c];
            if (img == kUnknown) known = false;
            else lhs[static_cast<size_t>(img)] += mab;
            continue;
          }
          if (!sys.row_of.count({m, c})) {
            known = false;
            continue;
          }
          for (i64 s = 0; s < t.n && known; ++s) {
            const i64 v = mult_of(t, sys, m, c, s);
            if (v == kUnknown) known = false;
            else lhs[static_cast<size_t>(s)] += mab * v;
          }
        }
        for (i64 m = 0; m < t.n && known; ++m) {
          const i64 mbc = mult_of(t, sys, b, c, m);
          if (mbc == kUnknown) known = false;
          if (!known || mbc == 0) continue;
          if (t.is_grouplike(m)) {
            const i64 img = t.right_translate(a, m);
            if (img == kUnknown) known = false;
            else rhs[static_cast<size_t>(img)] += mbc;
            continue;
          }
          if (!sys.row_of.count({a, m})) {
            known = false;
            continue;
          }
          for (i64 s = 0; s < t.n && known; ++s) {
            const i64 v = mult_of(t, sys, a, m, s);
            if (v == kUnknown) known = false;
            else rhs[static_cast<size_t>(s)] += mbc * v;
          }
        }
        if (known && lhs != rhs) return false;
      }
    }
  return true;
}

bool Searcher::closure_checks(const FusionTable& t, VarSys& sys,
                              Contradiction* contra) {
  const i64 g = t.group.order;

  auto lookup = [&](i64 a, i64 b, i64 c) -> i64 {
    return mult_of(t, sys, a, b, c);
  };

  for (i64 chi = g; chi < t.n; ++chi) {
    std::set<i64> mem;
    for (i64 e = 0; e < g; ++e) mem.insert(e);
    mem.insert(chi);
    bool complete = true, grew = true;
    while (grew && complete) {
      grew = false;
      const std::vector<i64> snap(mem.begin(), mem.end());
      for (i64 x : snap) {
        if (t.dual[x] == kUnknown) {
          complete = false;
          break;
        }
        if (mem.insert(t.dual[x]).second) grew = true;
      }
      if (!complete) break;
      for (i64 a : snap) {
        for (i64 b : snap) {
          for (i64 c = 0; c < t.n; ++c) {
            const i64 m = lookup(a, b, c);
            if (m == kUnknown) {
              complete = false;
              break;
            }
            if (m > 0 && mem.insert(c).second) grew = true;
          }
          if (!complete) break;
        }
        if (!complete) break;
      }
    }
    if (!complete) continue;
    i64 sub = 0;
    for (i64 x : mem) sub += t.degree[x] * t.degree[x];
    if (dim % sub != 0) {
      *contra = make_contradiction(
          "closure-divisibility",
          "the standard subalgebra generated by the grouplikes and character " +
              std::to_string(chi) + " has dimension " + std::to_string(sub) +
              ", which does not divide " + std::to_string(dim));
      return false;
    }
  }
  return true;
}

Status Searcher::dfs(FusionTable& t, int depth) {
  stats.max_depth = std::max<i64>(stats.max_depth, depth);
  {
    VarSys sys;
    Contradiction c;
    if (!build_system(t, sys, &c)) {
      ++stats.contradictions;
      if (depth == 0 && !root_contra) root_contra = c;
      return Status::Exhausted;
    }
  }

  for (const auto& cls : t.classes) {
    bool unknown = false;
    for (i64 id = cls.start; id < cls.start + cls.size; ++id)
      if (t.dual[id] == kUnknown) unknown = true;
    if (!unknown) continue;

    std::vector<i64> pairings;
    for (i64 k = 0; 2 * k <= cls.size; ++k) pairings.push_back(k);
    maybe_shuffle(pairings, 0x5349474d41ULL + static_cast<uint64_t>(cls.start));
    for (i64 k : pairings) {
      bump_node(depth);
      for (i64 i = 0; i < k; ++i) {
        t.dual[cls.start + 2 * i] = cls.start + 2 * i + 1;
        t.dual[cls.start + 2 * i + 1] = cls.start + 2 * i;
      }
      for (i64 id = cls.start + 2 * k; id < cls.start + cls.size; ++id)
        t.dual[id] = id;
      const Status st = dfs(t, depth + 1);
      for (i64 id = cls.start; id < cls.start + cls.size; ++id)
        t.dual[id] = kUnknown;
      if (st == Status::Found) return Status::Found;
    }
    return Status::Exhausted;
  }

  for (size_t ci = 0; ci < t.classes.size(); ++ci)
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      const auto& cls = t.classes[ci];
      for (i64 id = cls.start; id < cls.start + cls.size; ++id)
        if (t.action[gens[gi]][id] == kUnknown)
          return assign_block(t, ci, gi, depth);
    }

  FusionTable full = t;
  if (!finalize_structure(full)) {
    ++stats.contradictions;
    return Status::Exhausted;
  }
  VarSys sys;
  Contradiction c;
  if (!build_system(full, sys, &c)) {
    ++stats.contradictions;
    if (depth == 0 && !root_contra) root_contra = c;
    return Status::Exhausted;
  }
  return mult_dfs(full, sys, depth);
}

Status Searcher::assign_block(FusionTable& t, size_t ci, size_t gi,
                              int depth) {
  const auto& cls = t.classes[ci];
  const i64 gen = gens[gi];
  i64 pos = -1;
  for (i64 id = cls.start; id < cls.start + cls.size; ++id)
    if (t.action[gen][id] == kUnknown) {
      pos = id;
      break;
    }
  if (pos < 0) return dfs(t, depth);

  std::vector<char> used(static_cast<size_t>(t.n), 0);
  for (i64 id = cls.start; id < cls.start + cls.size; ++id)
    if (t.action[gen][id] != kUnknown)
      used[static_cast<size_t>(t.action[gen][id])] = 1;

  const i64 og = t.group.element_order(gen);
  auto stab_multiple_ok = [&](i64 q) {
    for (i64 s : SS[ci])
      if (s % q == 0) return true;
    return false;
  };

  std::vector<i64> cands;
  for (i64 y = cls.start; y < cls.start + cls.size; ++y) {
    if (used[static_cast<size_t>(y)]) continue;
    if (y == pos) {
      if (!stab_multiple_ok(og)) continue;
    } else {
      i64 cur = y, len = 1;
      bool closes = false;
      while (t.action[gen][cur] != kUnknown) {
        cur = t.action[gen][cur];
        ++len;
        if (cur == pos) {
          closes = true;
          break;
        }
      }
      if (closes && (og % len != 0 || !stab_multiple_ok(og / len))) continue;
    }
    cands.push_back(y);
  }

  const i64 spos = t.dual[pos];
  std::vector<i64> reps;
  bool have_fixed = false, have_pair = false;
  for (i64 y : cands) {
    const i64 sy = t.dual[y];
    if (distinguished[static_cast<size_t>(y)] || y == pos || y == spos ||
        sy == kUnknown) {
      reps.push_back(y);
    } else if (sy == y) {
      if (!have_fixed) {
        reps.push_back(y);
        have_fixed = true;
      }
    } else if (!distinguished[static_cast<size_t>(sy)] && sy != pos &&
               sy != spos) {
      if (!have_pair) {
        reps.push_back(y);
        have_pair = true;
      }
    } else {
      reps.push_back(y);
    }
  }
  maybe_shuffle(reps, 0x504f53ULL * static_cast<uint64_t>(pos + 1) +
                          static_cast<uint64_t>(gen));

  for (i64 y : reps) {
    bump_node(depth);
    t.action[gen][pos] = y;
    std::vector<i64> marked;
    for (i64 id : {pos, y, spos, t.dual[y]}) {
      if (id == kUnknown) continue;
      if (!distinguished[static_cast<size_t>(id)]) {
        distinguished[static_cast<size_t>(id)] = 1;
        marked.push_back(id);
      }
    }
    const Status st = assign_block(t, ci, gi, depth + 1);
    for (i64 id : marked) distinguished[static_cast<size_t>(id)] = 0;
    t.action[gen][pos] = kUnknown;
    if (st == Status::Found) return Status::Found;
  }
  return Status::Exhausted;
}

bool Searcher::finalize_structure(FusionTable& t) {
  const auto& G = t.group;
  const i64 g = G.order, n = t.n;

  std::vector<char> have(static_cast<size_t>(g), 0);
  have[0] = 1;
  std::vector<i64> bfs{0};
  for (size_t qi = 0; qi < bfs.size(); ++qi) {
    const i64 u = bfs[qi];
    for (i64 gen : gens) {
      const i64 v = G.op(gen, u);
      if (have[static_cast<size_t>(v)]) continue;
      have[static_cast<size_t>(v)] = 1;
      for (i64 i = 0; i < n; ++i) {
        const i64 mid = t.action[u][i];
        if (mid == kUnknown || t.action[gen][mid] == kUnknown) return false;
        t.action[v][i] = t.action[gen][mid];
      }
      bfs.push_back(v);
    }
  }
  for (char h : have)
    if (!h) return false;

  for (i64 e = 0; e < g; ++e) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (i64 i = 0; i < n; ++i) {
      const i64 img = t.action[e][i];
      if (img == kUnknown || t.degree[img] != t.degree[i] ||
          seen[static_cast<size_t>(img)])
        return false;
      seen[static_cast<size_t>(img)] = 1;
    }
  }
  for (i64 e = 0; e < g; ++e)
    for (i64 f = 0; f < g; ++f) {
      const i64 ef = G.op(e, f);
      for (i64 i = 0; i < n; ++i)
        if (t.action[ef][i] != t.action[e][t.action[f][i]]) return false;
    }

  for (size_t ci = 0; ci < t.classes.size(); ++ci) {
    const auto& cls = t.classes[ci];
    for (i64 id = cls.start; id < cls.start + cls.size; ++id) {
      i64 s = 0;
      for (i64 e = 0; e < g; ++e)
        if (t.action[e][id] == id) ++s;
      if (std::find(SS[ci].begin(), SS[ci].end(), s) == SS[ci].end())
        return false;
    }
  }
  return true;
}

Status Searcher::mult_dfs(const FusionTable& t, VarSys& sys, int depth) {
  stats.max_depth = std::max<i64>(stats.max_depth, depth);
  int var = -1;
  for (int root : sys.var_order)
    if (sys.live[static_cast<size_t>(root)] > 1) {
      var = root;
      break;
    }
  if (var < 0) {
    if (!associativity_ok(t, sys)) {
      ++stats.contradictions;
      return Status::Exhausted;
    }
    FusionTable w = assemble(t, sys);
    auto issues = validate_table(w);
    if (!issues.empty())
      fail("InternalError",
           "search produced a witness rejected by the validator: " +
               issues.front());
    witness = std::move(w);
    return Status::Found;
  }

  std::vector<i64> values;
  const auto& d = sys.dom[static_cast<size_t>(var)];
  for (size_t v = 0; v < d.size(); ++v)
    if (d[v]) values.push_back(static_cast<i64>(v));
  maybe_shuffle(values, 0x4d554c54ULL + static_cast<uint64_t>(var));

  for (i64 v : values) {
    bump_node(depth);
    const size_t mark = sys.trail.size();
    std::vector<int> changed;
    bool ok = sys.restrict_to(var, v, &changed);
    if (ok) {
      std::deque<int> queue;
      for (int ri : sys.var_rows[static_cast<size_t>(var)]) queue.push_back(ri);
      Contradiction c;
      ok = fixpoint(t, sys, std::move(queue), false, &c);
    }
    if (ok) {
      if (mult_dfs(t, sys, depth + 1) == Status::Found) return Status::Found;
    } else {
      ++stats.contradictions;
    }
    sys.undo_to(mark);
  }
  return Status::Exhausted;
}

FusionTable Searcher::assemble(const FusionTable& t, VarSys& sys) const {
  FusionTable w = t;
  for (auto& row : sys.rows) {
    std::vector<i64> vec(static_cast<size_t>(t.n), 0);
    for (i64 c = 0; c < t.n; ++c) {
      const int root = sys.find(sys.index.at(sys.key_of(row.a, row.b, c)));
      vec[static_cast<size_t>(c)] = sys.single_value(root);
    }
    w.products[{row.a, row.b}] = std::move(vec);
  }
  return w;
}

}  // namespace

SearchResult search_consistent_table(const profile::AlgebraType& type,
                                     const grp::Group& group,
                                     const SearchOptions& options) {
  FusionTable skel = build_skeleton(type, group);
  SearchResult res;
  std::map<std::string, std::string> data{
      {"type", type.str()},
      {"group", group.name},
      {"budget", std::to_string(options.node_budget)},
      {"focus", !options.focus_pairs.empty()
                    ? "explicit"
                    : (options.focus_all ? "all" : "default")},
  };

  auto pr = propagate(skel);
  if (!pr.ok()) {
    res.outcome = Outcome::Infeasible;
    res.root_contradiction = pr.contradiction;
    res.trace.steps.push_back(trace::make_step(
        pr.contradiction->rule, pr.contradiction->detail, data));
    res.trace.steps.push_back(trace::make_step(
        "search-branch", "refuted before branching: 0 nodes", data));
    return res;
  }
  FusionTable base = std::move(*pr.table);

  const i64 higher = base.n - group.order;
  if (higher * higher * base.n > 250'000)
    fail("Unsupported", "type " + type.str() +
                            " is too large for the table search");

  Searcher s;
  s.type = type;
  s.group = group;
  s.opts = options;
  s.dim = type.dim();
  for (int e : grp::abelian_generators(group)) s.gens.push_back(e);
  s.distinguished.assign(static_cast<size_t>(base.n), 0);
  for (const auto& cls : base.classes)
    s.SS.push_back(admissible_stabilizer_orders(type, group.order, cls.degree));

  if (!options.focus_pairs.empty()) {
    for (const auto& [a, b] : options.focus_pairs) {
      if (a < 0 || a >= base.n || b < 0 || b >= base.n)
        fail("InvalidArgument", "focus pair id out of range");
      if (base.is_grouplike(a) || base.is_grouplike(b))
        fail("InvalidArgument",
             "focus pairs must involve higher-degree characters");
    }
    s.focus = options.focus_pairs;
  } else if (options.focus_all) {
    for (i64 a = group.order; a < base.n; ++a)
      for (i64 b = group.order; b < base.n; ++b) s.focus.push_back({a, b});
  } else {
    s.focus = default_focus(base);
  }

  try {
    const Status st = s.dfs(base, 0);
    res.stats = s.stats;
    if (st == Status::Found) {
      res.outcome = Outcome::Feasible;
      res.witness = std::move(s.witness);
      res.trace.steps.push_back(trace::make_step(
          "search-branch",
          "consistent table found after " + std::to_string(s.stats.nodes) +
              " nodes",
          data));
    } else {
      res.outcome = Outcome::Infeasible;
      res.root_contradiction = s.root_contra;
      if (s.root_contra)
        res.trace.steps.push_back(trace::make_step(
            s.root_contra->rule, s.root_contra->detail, data));
      res.trace.steps.push_back(trace::make_step(
          "search-branch",
          "every branch refuted: " + std::to_string(s.stats.nodes) +
              " nodes, " + std::to_string(s.stats.contradictions) +
              " contradictions",
          data));
    }
  } catch (const BudgetExhausted&) {
    res.stats = s.stats;
    res.outcome = Outcome::BudgetExceeded;
    res.trace.steps.push_back(trace::make_step(
        "search-branch",
        "node budget " + std::to_string(options.node_budget) + " exhausted",
        data));
  }
  return res;
}

}  // namespace hopfcheck::fusion
