#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hopfcheck::grp {

using i64 = std::int64_t;

/**
 * Finite group given by its multiplication table. Element 0 is the identity.
 * Small orders only; validation is by exhaustion.
 */
struct Group {
  std::string name;
  int order = 1;
  std::vector<int> table;  // table[a * order + b] = a * b

  int op(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }
  int inverse(int a) const;
  int element_order(int a) const;
  bool is_abelian() const;

  /** Throws Error("InvalidArgument") if the table is not a group. */
  void validate() const;

  bool operator==(const Group&) const = default;
};

Group trivial_group();
Group cyclic(int n);
Group direct_product(const Group& a, const Group& b);
Group dihedral(int n);  // order 2n, n >= 1
Group dicyclic(int n);  // order 4n, n >= 1; dicyclic(2) = Q8

/** C_a x| C_b with the generator of C_b acting by x -> x^k; needs k^b = 1 mod a. */
Group semidirect_cyclic(int a, int b, int k);

Group alternating4();
Group pauli16();           // central product D8 * C4, order 16
Group semidirect_v4_c4();  // (C2 x C2) x| C4, C4 swapping the factors
Group semidirect_c4_c4();  // C4 x| C4 by inversion

/**
 * Every group of order <= max_order up to isomorphism, max_order <= 16.
 * 42 groups at max_order = 16.
 */
std::vector<Group> small_group_catalog(int max_order);

/**
 * Abelian groups of order n up to isomorphism (direct products of cyclic
 * groups of prime-power order), deterministically ordered and named
 * ("C12", "C2xC2x C3" style without the space).
 */
std::vector<Group> abelian_groups_of_order(i64 n);

/** Abelian group from an explicit cyclic factor list. */
Group abelian_from_factors(const std::vector<int>& factors);

/** Elements of the subgroup generated by `gens`, sorted. */
std::vector<int> generated_subgroup(const Group& g, const std::vector<int>& gens);

/** Minimal generating tuple (greedy, deterministic) for an abelian group. */
std::vector<int> abelian_generators(const Group& g);

}  // namespace hopfcheck::grp
