#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/group.hpp"

using namespace hopfcheck;
using grp::Group;

namespace {

std::map<int, int> order_histogram(const Group& g) {
  std::map<int, int> h;
  for (int x = 0; x < g.order; ++x) ++h[g.element_order(x)];
  return h;
}

int center_size(const Group& g) {
  int n = 0;
  for (int x = 0; x < g.order; ++x) {
    bool central = true;
    for (int y = 0; y < g.order; ++y) central &= g.op(x, y) == g.op(y, x);
    n += central;
  }
  return n;
}

int conjugacy_class_count(const Group& g) {
  std::vector<char> seen(static_cast<size_t>(g.order), 0);
  int classes = 0;
  for (int x = 0; x < g.order; ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    ++classes;
    for (int y = 0; y < g.order; ++y) seen[static_cast<size_t>(g.op(g.op(y, x), g.inverse(y)))] = 1;
  }
  return classes;
}

int commuting_pairs(const Group& g) {
  int n = 0;
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) n += g.op(x, y) == g.op(y, x);
  return n;
}

std::vector<int> commutator_subgroup(const Group& g) {
  std::vector<int> gens;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      gens.push_back(g.op(g.op(g.inverse(a), g.inverse(b)), g.op(a, b)));
  return grp::generated_subgroup(g, gens);
}

Group quotient(const Group& g, const std::vector<int>& normal) {
  std::vector<int> rep(static_cast<size_t>(g.order), -1);
  std::vector<int> canon;
  for (int x = 0; x < g.order; ++x) {
    if (rep[static_cast<size_t>(x)] != -1) continue;
    canon.push_back(x);
    for (int z : normal) rep[static_cast<size_t>(g.op(x, z))] = static_cast<int>(canon.size()) - 1;
  }
  const int ord = static_cast<int>(canon.size());
  Group q{"quot", ord, std::vector<int>(static_cast<size_t>(ord) * ord)};
  for (int i = 0; i < ord; ++i)
    for (int j = 0; j < ord; ++j)
      q.table[static_cast<size_t>(i) * ord + j] =
          rep[static_cast<size_t>(g.op(canon[static_cast<size_t>(i)], canon[static_cast<size_t>(j)]))];
  return q;
}

struct Invariants {
  int order;
  bool abelian;
  std::map<int, int> histogram;
  int center;
  int classes;
  int commuting;
  std::map<int, int> abelianized_histogram;

  auto tie() const {
    return std::tie(order, abelian, histogram, center, classes, commuting, abelianized_histogram);
  }
  bool operator==(const Invariants& o) const { return tie() == o.tie(); }
  bool operator<(const Invariants& o) const { return tie() < o.tie(); }
};

Invariants invariants_of(const Group& g) {
  Group ab = quotient(g, commutator_subgroup(g));
  return Invariants{g.order,        g.is_abelian(),     order_histogram(g), center_size(g),
                    conjugacy_class_count(g), commuting_pairs(g), order_histogram(ab)};
}

}  // namespace

TEST_CASE("catalog groups are valid groups") {
  auto cat = grp::small_group_catalog(16);
  REQUIRE(cat.size() == 42);
  for (const auto& g : cat) {
    CAPTURE(g.name);
    CHECK_NOTHROW(g.validate());
  }
}

TEST_CASE("catalog has the right census per order") {
  auto cat = grp::small_group_catalog(16);
  std::map<int, int> census;
  for (const auto& g : cat) ++census[g.order];
  std::map<int, int> want{{1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},
                          {7, 1},  {8, 5},  {9, 2},  {10, 2}, {11, 1}, {12, 5},
                          {13, 1}, {14, 2}, {15, 1}, {16, 14}};
  CHECK(census == want);
}

TEST_CASE("catalog groups are pairwise non-isomorphic") {
  auto cat = grp::small_group_catalog(16);
  std::vector<Invariants> inv;
  for (const auto& g : cat) inv.push_back(invariants_of(g));
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j) {
      CAPTURE(cat[i].name);
      CAPTURE(cat[j].name);
      CHECK_FALSE(inv[i] == inv[j]);
    }
}

TEST_CASE("structure spot checks") {
  Group q8 = grp::dicyclic(2);
  CHECK(q8.order == 8);
  CHECK(order_histogram(q8) == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});

  Group d4 = grp::dihedral(4);
  CHECK(order_histogram(d4) == std::map<int, int>{{1, 1}, {2, 5}, {4, 2}});
  CHECK(center_size(d4) == 2);

  Group a4 = grp::alternating4();
  CHECK(a4.order == 12);
  CHECK(order_histogram(a4) == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}});
  CHECK_FALSE(a4.is_abelian());

  Group p16 = grp::pauli16();
  CHECK(p16.order == 16);
  CHECK(center_size(p16) == 4);
  CHECK(conjugacy_class_count(p16) == 10);
  CHECK(order_histogram(p16).at(2) == 7);

  Group m16 = grp::semidirect_cyclic(8, 2, 5);
  CHECK(order_histogram(m16).at(8) == 8);

  CHECK_THROWS_AS(grp::semidirect_cyclic(8, 2, 2), Error);
}

TEST_CASE("element order and inverses") {
  Group d4 = grp::dihedral(4);
  for (int x = 0; x < d4.order; ++x) {
    CHECK(d4.op(x, d4.inverse(x)) == 0);
    CHECK(d4.op(d4.inverse(x), x) == 0);
    int ord = d4.element_order(x);
    int acc = 0;
    for (int k = 0; k < ord; ++k) acc = d4.op(acc, x);
    CHECK(acc == 0);
  }
}

TEST_CASE("abelian isomorphism classes per order") {
  auto of4 = grp::abelian_groups_of_order(4);
  REQUIRE(of4.size() == 2);
  CHECK(of4[0].name == "C4");
  CHECK(of4[1].name == "C2xC2");

  CHECK(grp::abelian_groups_of_order(16).size() == 5);
  CHECK(grp::abelian_groups_of_order(1).size() == 1);

  auto of12 = grp::abelian_groups_of_order(12);
  REQUIRE(of12.size() == 2);
  std::set<std::string> names{of12[0].name, of12[1].name};
  CHECK(names == std::set<std::string>{"C12", "C6xC2"});

  auto of338 = grp::abelian_groups_of_order(338);  // 2 * 13^2
  REQUIRE(of338.size() == 2);
  std::set<std::string> names338{of338[0].name, of338[1].name};
  CHECK(names338 == std::set<std::string>{"C338", "C26xC13"});
  for (const auto& g : of338) CHECK(g.is_abelian());

  auto of121 = grp::abelian_groups_of_order(121);
  REQUIRE(of121.size() == 2);
  CHECK(of121[0].name == "C121");
  CHECK(of121[1].name == "C11xC11");
}

TEST_CASE("abelian groups from explicit factors") {
  Group g = grp::abelian_from_factors({4, 2});
  CHECK(g.name == "C4xC2");
  CHECK(g.order == 8);
  CHECK(order_histogram(g) == order_histogram(grp::direct_product(grp::cyclic(4), grp::cyclic(2))));

  CHECK(grp::abelian_from_factors({3, 4}).name == "C12");
  CHECK(grp::abelian_from_factors({}).name == "C1");
}

TEST_CASE("generated subgroups and abelian generators") {
  Group c12 = grp::cyclic(12);
  CHECK(grp::generated_subgroup(c12, {4}) == std::vector<int>{0, 4, 8});
  CHECK(grp::generated_subgroup(c12, {}) == std::vector<int>{0});

  auto gens = grp::abelian_generators(c12);
  REQUIRE(gens.size() == 1);
  CHECK(c12.element_order(gens[0]) == 12);

  Group v4 = grp::abelian_from_factors({2, 2});
  CHECK(grp::abelian_generators(v4).size() == 2);

  Group c4c4 = grp::abelian_from_factors({4, 4});
  auto g44 = grp::abelian_generators(c4c4);
  REQUIRE(g44.size() == 2);
  CHECK(static_cast<int>(grp::generated_subgroup(c4c4, g44).size()) == 16);
}
