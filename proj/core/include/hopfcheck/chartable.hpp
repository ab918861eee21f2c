#pragma once

#include <complex>
#include <vector>

#include "hopfcheck/fusion.hpp"
#include "hopfcheck/group.hpp"

namespace hopfcheck::chart {

using arith::i64;

/**
 * Character table of a finite group, computed numerically and rounded to
 * exact integers. Irreducibles are sorted by ascending degree (ties broken
 * by value rows); every rounded quantity is checked to tolerance 1e-6 and
 * the rows are verified orthonormal, so a successful construction is a
 * certificate of correctness.
 */
struct CharacterTable {
  grp::Group group;
  /** Conjugacy classes as sorted element lists; classes[0] = {identity}. */
  std::vector<std::vector<int>> classes;
  std::vector<i64> degrees;
  /** values[irrep][class]. */
  std::vector<std::vector<std::complex<double>>> values;
  /** Contragredient index per irreducible. */
  std::vector<i64> dual;
  /** product[a][b][c] = multiplicity of c in the tensor product a * b. */
  std::vector<std::vector<std::vector<i64>>> product;
};

/**
 * Computes the table by simultaneously diagonalizing the class-sum
 * multiplication matrices (eigenvectors of a random real combination).
 * Throws Error("NumericalError") if eigenvalues collide past retrying or a
 * rounded quantity misses an integer.
 */
CharacterTable character_table(const grp::Group& g);

/**
 * The character ring of the group as a fully decided fusion table over its
 * group of linear characters: an independently constructed ground-truth
 * instance for the table search and validator.
 */
fusion::FusionTable fusion_table_of(const grp::Group& g);

}  // namespace hopfcheck::chart
