#include "hopfcheck/chartable.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "hopfcheck/errors.hpp"

namespace hopfcheck::chart {

namespace {

constexpr double kTol = 1e-6;

i64 round_checked(double x, const std::string& what) {
  const double r = std::round(x);
  if (std::abs(x - r) > kTol)
    fail("NumericalError", what + " = " + std::to_string(x) +
                               " is not integral within tolerance");
  return static_cast<i64>(r);
}

}  // namespace

CharacterTable character_table(const grp::Group& g) {
  g.validate();
  const int n = g.order;
  CharacterTable ct;
  ct.group = g;

  std::vector<int> cls_of(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (cls_of[static_cast<size_t>(x)] >= 0) continue;
    const int id = static_cast<int>(ct.classes.size());
    std::vector<int> members;
    for (int t = 0; t < n; ++t) {
      const int y = g.op(g.op(t, x), g.inverse(t));
      if (cls_of[static_cast<size_t>(y)] < 0) {
        cls_of[static_cast<size_t>(y)] = id;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    ct.classes.push_back(std::move(members));
  }
  const int r = static_cast<int>(ct.classes.size());

  // Multiplication matrices of the class sums: N[i](j, k) counts the pairs
  // (x, y) in C_i x C_j with x y equal to a fixed representative of C_k.
  std::vector<Eigen::MatrixXd> N(static_cast<size_t>(r),
                                 Eigen::MatrixXd::Zero(r, r));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      const int z = ct.classes[static_cast<size_t>(k)][0];
      for (int x : ct.classes[static_cast<size_t>(i)]) {
        const int j = cls_of[static_cast<size_t>(g.op(g.inverse(x), z))];
        N[static_cast<size_t>(i)](j, k) += 1.0;
      }
    }

  // Central characters: simultaneous eigenvectors, obtained from a random
  // combination with distinct eigenvalues.
  std::mt19937_64 rng(0x434c535355u);
  std::uniform_real_distribution<double> unif(0.25, 1.0);
  Eigen::MatrixXcd vecs;
  bool separated = false;
  for (int attempt = 0; attempt < 64 && !separated; ++attempt) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(r, r);
    for (int i = 0; i < r; ++i) M += unif(rng) * N[static_cast<size_t>(i)];
    Eigen::EigenSolver<Eigen::MatrixXd> es(M);
    separated = true;
    for (int a = 0; a < r && separated; ++a)
      for (int b = a + 1; b < r; ++b)
        if (std::abs(es.eigenvalues()(a) - es.eigenvalues()(b)) < 1e-8) {
          separated = false;
          break;
        }
    if (separated) vecs = es.eigenvectors();
  }
  if (!separated)
    fail("NumericalError",
         "could not separate the class-matrix eigenvalues for group '" +
             g.name + "'");

  struct Irrep {
    i64 degree;
    std::vector<std::complex<double>> vals;
  };
  std::vector<Irrep> irreps;
  for (int c = 0; c < r; ++c) {
    Eigen::VectorXcd w = vecs.col(c);
    if (std::abs(w(0)) < 1e-12)
      fail("NumericalError", "central character vanishes on the identity");
    w /= w(0);
    double inv_sq = 0;
    for (int i = 0; i < r; ++i)
      inv_sq += std::norm(w(i)) /
                static_cast<double>(ct.classes[static_cast<size_t>(i)].size());
    const double deg = std::sqrt(static_cast<double>(n) / inv_sq);
    Irrep ir;
    ir.degree = round_checked(deg, "a character degree");
    ir.vals.resize(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i)
      ir.vals[static_cast<size_t>(i)] =
          w(i) * deg /
          static_cast<double>(ct.classes[static_cast<size_t>(i)].size());
    irreps.push_back(std::move(ir));
  }

  auto key_less = [r](const Irrep& a, const Irrep& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (int i = 0; i < r; ++i) {
      const double re = a.vals[static_cast<size_t>(i)].real() -
                        b.vals[static_cast<size_t>(i)].real();
      if (std::abs(re) > 1e-7) return re < 0;
      const double im = a.vals[static_cast<size_t>(i)].imag() -
                        b.vals[static_cast<size_t>(i)].imag();
      if (std::abs(im) > 1e-7) return im < 0;
    }
    return false;
  };
  std::sort(irreps.begin(), irreps.end(), key_less);

  i64 dim_sum = 0;
  for (const auto& ir : irreps) dim_sum += ir.degree * ir.degree;
  if (dim_sum != n)
    fail("NumericalError", "squared degrees sum to " + std::to_string(dim_sum) +
                               " instead of the group order");

  auto inner = [&](const Irrep& a, const Irrep& b) {
    std::complex<double> acc = 0;
    for (int i = 0; i < r; ++i)
      acc += static_cast<double>(ct.classes[static_cast<size_t>(i)].size()) *
             a.vals[static_cast<size_t>(i)] *
             std::conj(b.vals[static_cast<size_t>(i)]);
    return acc / static_cast<double>(n);
  };
  for (size_t a = 0; a < irreps.size(); ++a)
    for (size_t b = 0; b < irreps.size(); ++b) {
      const auto ip = inner(irreps[a], irreps[b]);
      const double expect = a == b ? 1.0 : 0.0;
      if (std::abs(ip.real() - expect) > kTol || std::abs(ip.imag()) > kTol)
        fail("NumericalError", "character rows are not orthonormal");
    }

  for (auto& ir : irreps) {
    ct.degrees.push_back(ir.degree);
    ct.values.push_back(std::move(ir.vals));
  }

  ct.dual.assign(static_cast<size_t>(r), -1);
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      bool match = true;
      for (int i = 0; i < r && match; ++i)
        if (std::abs(ct.values[static_cast<size_t>(a)][static_cast<size_t>(i)] -
                     std::conj(ct.values[static_cast<size_t>(b)]
                                        [static_cast<size_t>(i)])) > kTol)
          match = false;
      if (match) {
        ct.dual[static_cast<size_t>(a)] = b;
        break;
      }
    }
    if (ct.dual[static_cast<size_t>(a)] < 0)
      fail("NumericalError", "no contragredient found for an irreducible");
  }

  ct.product.assign(
      static_cast<size_t>(r),
      std::vector<std::vector<i64>>(static_cast<size_t>(r),
                                    std::vector<i64>(static_cast<size_t>(r))));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        std::complex<double> acc = 0;
        for (int i = 0; i < r; ++i)
          acc +=
              static_cast<double>(ct.classes[static_cast<size_t>(i)].size()) *
              ct.values[static_cast<size_t>(a)][static_cast<size_t>(i)] *
              ct.values[static_cast<size_t>(b)][static_cast<size_t>(i)] *
              std::conj(
                  ct.values[static_cast<size_t>(c)][static_cast<size_t>(i)]);
        acc /= static_cast<double>(n);
        if (std::abs(acc.imag()) > kTol)
          fail("NumericalError", "a product multiplicity is not real");
        const i64 m = round_checked(acc.real(), "a product multiplicity");
        if (m < 0)
          fail("NumericalError", "a product multiplicity is negative");
        ct.product[static_cast<size_t>(a)][static_cast<size_t>(b)]
                  [static_cast<size_t>(c)] = m;
      }

  return ct;
}

fusion::FusionTable fusion_table_of(const grp::Group& g) {
  const CharacterTable ct = character_table(g);
  const int r = static_cast<int>(ct.degrees.size());

  // Irreducibles are already sorted by ascending degree with the trivial
  // character first (its value row is maximal among the linear ones only in
  // the all-ones position; verify explicitly).
  std::vector<int> linear;
  for (int a = 0; a < r; ++a)
    if (ct.degrees[static_cast<size_t>(a)] == 1) linear.push_back(a);
  const int gl = static_cast<int>(linear.size());

  int triv = -1;
  for (int a : linear) {
    bool ones = true;
    for (const auto& v : ct.values[static_cast<size_t>(a)])
      if (std::abs(v - std::complex<double>(1.0, 0.0)) > kTol) ones = false;
    if (ones) {
      triv = a;
      break;
    }
  }
  if (triv < 0) fail("NumericalError", "trivial character not found");
  std::rotate(linear.begin(),
              std::find(linear.begin(), linear.end(), triv), linear.end());

  std::vector<int> order = linear;
  for (int a = 0; a < r; ++a)
    if (ct.degrees[static_cast<size_t>(a)] > 1) order.push_back(a);
  std::vector<int> newid(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) newid[static_cast<size_t>(order[i])] = i;

  auto single_constituent = [&](int a, int b) {
    const auto& row =
        ct.product[static_cast<size_t>(a)][static_cast<size_t>(b)];
    int hit = -1;
    for (int c = 0; c < r; ++c) {
      if (row[static_cast<size_t>(c)] == 0) continue;
      if (hit >= 0 || row[static_cast<size_t>(c)] != 1)
        fail("NumericalError",
             "a product with a linear factor is not a single irreducible");
      hit = c;
    }
    return hit;
  };

  grp::Group glg;
  glg.name = "lin(" + g.name + ")";
  glg.order = gl;
  glg.table.assign(static_cast<size_t>(gl) * gl, 0);
  for (int i = 0; i < gl; ++i)
    for (int j = 0; j < gl; ++j) {
      const int c = single_constituent(linear[static_cast<size_t>(i)],
                                       linear[static_cast<size_t>(j)]);
      glg.table[static_cast<size_t>(i) * gl + j] = newid[static_cast<size_t>(c)];
    }
  glg.validate();

  fusion::FusionTable t;
  t.group = glg;
  t.n = r;
  t.degree.resize(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i)
    t.degree[static_cast<size_t>(i)] = ct.degrees[static_cast<size_t>(order[i])];

  profile::AlgebraType type;
  type.entries.push_back({1, gl});
  for (int i = gl; i < r;) {
    const i64 d = t.degree[static_cast<size_t>(i)];
    int j = i;
    while (j < r && t.degree[static_cast<size_t>(j)] == d) ++j;
    type.entries.push_back({d, j - i});
    t.classes.push_back({d, i, j - i});
    i = j;
  }
  t.type = type;

  t.dual.resize(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i)
    t.dual[static_cast<size_t>(i)] = newid[static_cast<size_t>(
        ct.dual[static_cast<size_t>(order[i])])];

  t.action.assign(static_cast<size_t>(gl),
                  std::vector<i64>(static_cast<size_t>(r)));
  for (int e = 0; e < gl; ++e)
    for (int i = 0; i < r; ++i) {
      const int c =
          single_constituent(linear[static_cast<size_t>(e)],
                             order[static_cast<size_t>(i)]);
      t.action[static_cast<size_t>(e)][static_cast<size_t>(i)] =
          newid[static_cast<size_t>(c)];
    }

  for (int a = gl; a < r; ++a)
    for (int b = gl; b < r; ++b) {
      std::vector<i64> row(static_cast<size_t>(r));
      for (int c = 0; c < r; ++c)
        row[static_cast<size_t>(c)] =
            ct.product[static_cast<size_t>(order[a])]
                      [static_cast<size_t>(order[b])]
                      [static_cast<size_t>(order[c])];
      t.products[{a, b}] = std::move(row);
    }

  return t;
}

}  // namespace hopfcheck::chart
