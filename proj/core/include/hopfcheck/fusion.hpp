#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcheck/arithmetic.hpp"
#include "hopfcheck/group.hpp"
#include "hopfcheck/trace.hpp"
#include "hopfcheck/typeprofile.hpp"

namespace hopfcheck::fusion {

using arith::i64;

inline constexpr i64 kUnknown = -1;

/** A maximal run of basis ids sharing one degree > 1. */
struct DegreeClass {
  i64 degree = 0;
  i64 start = 0;
  i64 size = 0;
  bool operator==(const DegreeClass&) const = default;
};

/**
 * A (possibly partial) character ring on a fixed basis.
 *
 * Basis ids: 0..g-1 are the one-dimensional characters, identified with the
 * elements of `group` (id 0 is the unit). Ids g..n-1 are the higher-degree
 * characters, grouped into contiguous classes of ascending degree.
 *
 * `dual[i]` is the basis id of the contragredient (kUnknown if undecided),
 * `action[e][i]` the id of the product (element e) * (character i).
 * `products[(a,b)]` is the decomposition row of a * b: a vector of length n
 * whose c-th entry is the multiplicity of c in a * b, kUnknown if undecided.
 * Rows with a one-dimensional left or right factor are never stored; they
 * are synthesised from `action` and `dual`.
 */
struct FusionTable {
  profile::AlgebraType type;
  grp::Group group;
  i64 n = 0;
  std::vector<i64> degree;
  std::vector<DegreeClass> classes;
  std::vector<i64> dual;
  std::vector<std::vector<i64>> action;
  std::map<std::pair<i64, i64>, std::vector<i64>> products;

  bool is_grouplike(i64 id) const { return id >= 0 && id < group.order; }
  const DegreeClass* class_of(i64 id) const;

  /** (g^{-1} * dual(id))^*, or kUnknown if the inputs are undecided. */
  i64 right_translate(i64 id, i64 g) const;

  /** Multiplicity of c in a * b; kUnknown if undecided. */
  i64 multiplicity(i64 c, i64 a, i64 b) const;

  bool row_decided(i64 a, i64 b) const;

  /** Full decomposition of a * b if decided. */
  std::optional<std::vector<i64>> row(i64 a, i64 b) const;

  bool operator==(const FusionTable&) const = default;
};

/** A refuted constraint: catalog rule, its citation, and specifics. */
struct Contradiction {
  std::string rule;
  std::string citation;
  std::string detail;
  bool operator==(const Contradiction&) const = default;
};

/**
 * Initial table for a type over a grouplike group: one-dimensional part
 * fixed by the group law, everything else undecided.
 * Throws GroupMismatch if group.order != type's grouplike count and
 * Unsupported if the group is nonabelian.
 */
FusionTable build_skeleton(const profile::AlgebraType& type,
                           const grp::Group& group);

struct PropagateResult {
  std::optional<FusionTable> table;
  std::optional<Contradiction> contradiction;
  bool ok() const { return table.has_value(); }
};

/**
 * Fixpoint of the forced deductions: decides duals and actions on
 * one-element classes, checks each degree class for an admissible
 * stabilizer order and orbit partition, and completes or refutes partial
 * product rows by degree accounting. Idempotent.
 */
PropagateResult propagate(const FusionTable& table);

/**
 * All multisets of orbit lengths for the grouplike action on the class of
 * the given degree: each length divides the group order, the lengths sum to
 * the class size, and each induced stabilizer order divides the squared
 * degree. Sorted lexicographically, each multiset ascending.
 */
std::vector<std::vector<i64>> orbit_assignment(const FusionTable& table,
                                               i64 degree);

struct StabilizerResult {
  std::vector<i64> elements;
  /** False when the order fails to divide gcd(degree^2, group order). */
  bool consistent = true;
};

/** Stabilizer of a character under the decided action; throws Unassigned. */
StabilizerResult stabilizer_of(const FusionTable& table, i64 chi);

struct ClosureResult {
  /** False if an undecided row blocked the computation. */
  bool complete = false;
  i64 dimension = 0;
  std::vector<i64> members;
};

/**
 * Closure of the seed characters under duals and product constituents,
 * using decided rows only. When complete, `dimension` is the sum of squared
 * degrees of the members (the dimension of the standard subalgebra they
 * span).
 */
ClosureResult standard_subalgebra_closure(const FusionTable& table,
                                          const std::vector<i64>& seeds);

enum class Outcome { Feasible, Infeasible, BudgetExceeded };

struct SearchOptions {
  i64 node_budget = 10'000'000;
  /** Focus every pair of higher-degree characters, not just the default. */
  bool focus_all = false;
  /** Explicit focus rows (basis id pairs); overrides the default if set. */
  std::vector<std::pair<i64, i64>> focus_pairs;
  /** Nonzero: deterministically permute branching order (same outcome). */
  i64 order_seed = 0;
};

struct SearchStats {
  i64 nodes = 0;
  i64 propagations = 0;
  i64 contradictions = 0;
  i64 max_depth = 0;
  bool operator==(const SearchStats&) const = default;
};

struct SearchResult {
  Outcome outcome = Outcome::Infeasible;
  SearchStats stats;
  std::optional<FusionTable> witness;
  /** First refutation found at the root, when the result is Infeasible. */
  std::optional<Contradiction> root_contradiction;
  trace::ProofTrace trace;
};

/**
 * Decides whether the type admits a character ring over the given grouplike
 * group: branches over dualities, grouplike actions and multiplicities,
 * pruning with the forced deductions of `propagate` plus Frobenius
 * reciprocity, translation equivariance and standard-subalgebra
 * divisibility. Feasible results carry a witness with every focus row
 * decided. A node is one branching decision; exceeding the budget yields
 * BudgetExceeded.
 */
SearchResult search_consistent_table(const profile::AlgebraType& type,
                                     const grp::Group& group,
                                     const SearchOptions& options = {});

/** Default focus rows: all pairs from the two largest degree classes. */
std::vector<std::pair<i64, i64>> default_focus(const FusionTable& table);

/**
 * Independent witness checker: verifies basis shape, duality, action,
 * degree accounting, grouplike multiplicities, Frobenius reciprocity and
 * translation equivariance on every decided row. Returns violations,
 * empty when the table is consistent.
 */
std::vector<std::string> validate_table(const FusionTable& table);

}  // namespace hopfcheck::fusion
