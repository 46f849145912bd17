#include <gtest/gtest.h>

#include <random>

#include "charlattice/abmultiset.hpp"
#include "factor_oracle.hpp"

using namespace charlattice;
using oracle::brute_binary;
using oracle::key_of;
using oracle::keys;
using oracle::Key;

namespace {

GroupMultiset ints(std::vector<int> xs) { return GroupMultiset::integers(xs); }

GroupMultiset z2(const std::vector<std::pair<int, int>>& pts) {
  std::vector<AbGroupElem> e;
  for (auto [x, y] : pts) e.push_back({0, {x, y}});
  return GroupMultiset({1, 2}, e);
}

}  // namespace

TEST(Product, Examples) {
  EXPECT_EQ(multiset_product(ints({0, 1}), ints({0, 2})), ints({0, 1, 2, 3}));
  EXPECT_EQ(multiset_product(ints({0, 1}), ints({0, 1})), ints({0, 1, 1, 2}));
  EXPECT_EQ(multiset_product(ints({7}), ints({0, 1, 5})), ints({7, 8, 12}));
  EXPECT_THROW(multiset_product(ints({0}), z2({{0, 0}})), DimensionMismatchError);
}

TEST(Product, CommutativeAssociative) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> u(-3, 3);
  for (int t = 0; t < 50; ++t) {
    auto rnd = [&](int n) {
      std::vector<AbGroupElem> e;
      for (int i = 0; i < n; ++i) e.push_back({u(rng), {u(rng), u(rng)}});
      return GroupMultiset({5, 2}, e);
    };
    auto a = rnd(3), b = rnd(2), c = rnd(2);
    EXPECT_EQ(multiset_product(a, b), multiset_product(b, a));
    EXPECT_EQ(multiset_product(multiset_product(a, b), c), multiset_product(a, multiset_product(b, c)));
  }
}

TEST(Equivalent, Examples) {
  auto xi = equivalent(ints({0, 1, 3}), ints({5, 6, 8}));
  ASSERT_TRUE(xi);
  EXPECT_EQ(xi->free, IntVector{5});
  EXPECT_FALSE(equivalent(ints({0, 1}), ints({0, 2})));
  auto self = equivalent(ints({0, 4}), ints({0, 4}));
  ASSERT_TRUE(self);
  EXPECT_EQ(self->free, IntVector{0});
}

TEST(Equivalent, Torsion) {
  AbGroup g{4, 0};
  GroupMultiset a(g, {{0, {}}, {1, {}}}), b(g, {{3, {}}, {0, {}}});
  auto xi = equivalent(a, b);
  ASSERT_TRUE(xi);
  EXPECT_EQ(a.translated(*xi), b);
  EXPECT_EQ(canonical_form(a), canonical_form(b));
}

TEST(Equivalent, IsEquivalenceRelation) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> u(-4, 4);
  for (int t = 0; t < 100; ++t) {
    std::vector<AbGroupElem> e;
    for (int i = 0; i < 4; ++i) e.push_back({u(rng), {u(rng)}});
    GroupMultiset a({3, 1}, e);
    AbGroupElem x{u(rng), {u(rng)}}, y{u(rng), {u(rng)}};
    auto b = a.translated(x), c = b.translated(y);
    ASSERT_TRUE(equivalent(a, a));
    auto ab = equivalent(a, b), ba = equivalent(b, a), bc = equivalent(b, c), ac = equivalent(a, c);
    ASSERT_TRUE(ab && ba && bc && ac);
    EXPECT_EQ(a.translated(*ab), b);
    EXPECT_EQ(b.translated(*ba), a);
    EXPECT_EQ(a.translated(*ac), c);
    EXPECT_EQ(canonical_form(a), canonical_form(c));
  }
}

TEST(Factorizations, Examples) {
  auto ds = factorizations(ints({0, 1, 2, 3}), {2, 2});
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(multiset_product(ds[0].factors), ints({0, 1, 2, 3}));
  EXPECT_EQ(keys(ds), (std::set<Key>{key_of({ints({0, 1}), ints({0, 2})})}));

  auto rect = factorizations(z2({{0, 0}, {1, 0}, {0, 2}, {1, 2}}), {2, 2});
  EXPECT_EQ(rect.size(), 1u);  // {0, e1} x {0, 2 e2}; equal sizes may be swapped
  auto rect3 = factorizations(z2({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}), {2, 3});
  EXPECT_EQ(rect3.size(), 1u);

  EXPECT_THROW(factorizations(ints({0, 1, 2, 3, 4}), {2, 2}), PreconditionError);
  EXPECT_THROW(factorizations(ints({0, 1, 2, 3, 4}), {5, 1}), PreconditionError);
  EXPECT_EQ(factorizations(ints({0, 1, 2}), {3}).size(), 1u);
}

TEST(Factorizations, RandomAgainstBruteForce) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> u(-2, 2);
  const std::vector<std::pair<std::size_t, std::size_t>> profiles{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 4}, {2, 8}, {3, 3}};
  for (int t = 0; t < 60; ++t) {
    auto [a, b] = profiles[std::size_t(t) % profiles.size()];
    auto rnd = [&](std::size_t n) {
      std::vector<std::pair<int, int>> p;
      for (std::size_t i = 0; i < n; ++i) p.emplace_back(u(rng), u(rng));
      return z2(p);
    };
    // half the time a genuine product, otherwise arbitrary points
    GroupMultiset c = t % 2 ? multiset_product(rnd(a), rnd(b)) : rnd(a * b);
    auto ds = factorizations(c, {a, b});
    for (const auto& d : ds) EXPECT_EQ(multiset_product(d.factors), c);
    EXPECT_EQ(keys(ds), brute_binary(c, a, b)) << c;
    EXPECT_LE(BigInt(ds.size()), binary_factorization_bound(a, b));
    if (t % 2) {
      EXPECT_FALSE(ds.empty());
    }
  }
}

TEST(Factorizations, ThreeFactors) {
  auto cube = multiset_product({ints({0, 1}), ints({0, 2}), ints({0, 4})});
  auto ds = factorizations(cube, {2, 2, 2});
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(multiset_product(ds[0].factors), cube);
  // {0..7} also splits as {0,1,2,3} x {0,4} and {0,2,4,6} x {0,1}, etc.
  auto two = factorizations(cube, {4, 2});
  for (const auto& d : two) EXPECT_EQ(multiset_product(d.factors), cube);
  EXPECT_EQ(two.size(), 3u);
}

TEST(Generic, Examples) {
  EXPECT_TRUE(generic_ratio_check(ints({0, 3, 7}), 5));
  AbGroup g{6, 1};
  GroupMultiset c(g, {{0, {1}}, {3, {1}}});
  EXPECT_FALSE(generic_ratio_check(c, 2));
  EXPECT_TRUE(generic_ratio_check(c, 1));
  auto rep = generic_ratio_report(ints({0, 0, 1}), 3);
  EXPECT_TRUE(rep.ok);
  EXPECT_TRUE(rep.has_repeats);
}

TEST(KroneckerSplit, Examples) {
  auto aa = SemisimpleAlgebra::parse("A1+A1");
  auto fc = weight_multiset(aa, Weight{1, 1});
  auto ds = character_kronecker_split(fc, {2, 2});
  ASSERT_EQ(ds.size(), 1u);
  auto s1 = GroupMultiset({1, 2}, {{0, {-1, 0}}, {0, {1, 0}}});
  auto s2 = GroupMultiset({1, 2}, {{0, {0, -1}}, {0, {0, 1}}});
  EXPECT_EQ(keys(ds), (std::set<Key>{key_of({s1, s2})}));

  auto a3 = SemisimpleAlgebra::parse("A3");
  EXPECT_TRUE(character_kronecker_split(weight_multiset(a3, Weight{0, 1, 0}), {2, 3}).empty());
  EXPECT_EQ(character_kronecker_split(weight_multiset(a3, Weight{0, 1, 0}), {6}).size(), 1u);
}
