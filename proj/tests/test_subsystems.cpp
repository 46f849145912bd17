#include <gtest/gtest.h>

#include <set>

#include "charlattice/subsystems.hpp"

using namespace charlattice;

namespace {

std::set<std::string> signatures(const char* t) {
  std::set<std::string> s;
  for (const auto& sub : equal_rank_subsystems(RootSystem(SimpleType::parse(t)))) s.insert(sub.signature());
  return s;
}

void expect_valid(const Subsystem& s) {
  const RootSystem& rs = *s.parent;
  ASSERT_EQ(s.rank(), rs.rank());
  RatMatrix m(s.rank(), rs.rank());
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j) m(i, j) = s.selected_roots[i][j];
  EXPECT_EQ(rank(m), rs.rank());
  IntMatrix c = s.cartan();
  for (std::size_t k = 0; k < s.component_types.size(); ++k) {
    RootSystem comp(s.component_types[k]);
    std::size_t off = s.component_offsets[k];
    for (std::size_t i = 0; i < comp.rank(); ++i)
      for (std::size_t j = 0; j < comp.rank(); ++j)
        EXPECT_EQ(c(off + i, off + j), comp.cartan()(i, j)) << s.signature();
  }
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = 0; j < s.rank(); ++j) {
      if (i == j) continue;
      EXPECT_LE(c(i, j), 0);
    }
}

}  // namespace

TEST(Subsystems, G2) {
  EXPECT_EQ(signatures("g2"), (std::set<std::string>{"G2", "A2", "A1+A1"}));
}

TEST(Subsystems, B3) {
  EXPECT_EQ(signatures("b3"), (std::set<std::string>{"B3", "A3", "A1+A1+A1"}));
}

TEST(Subsystems, F4ContainsKnown) {
  auto s = signatures("f4");
  for (const char* x : {"F4", "B4", "C3+A1", "A2+A2", "A3+A1", "A1+A1+A1+A1"}) EXPECT_TRUE(s.count(x)) << x;
}

TEST(Subsystems, E8ContainsKnown) {
  auto s = signatures("e8");
  for (const char* x : {"E8", "D8", "A8", "E7+A1", "E6+A2", "A4+A4", "D4+D4", "A2+A2+A2+A2",
                        "A1+A1+A1+A1+A1+A1+A1+A1"})
    EXPECT_TRUE(s.count(x)) << x;
  EXPECT_TRUE(s.count("A7+A1"));
  EXPECT_FALSE(s.count("B4"));
}

TEST(Subsystems, AllValid) {
  for (const char* t : {"a3", "b4", "c4", "d5", "g2", "f4", "e6", "e7"})
    for (const auto& s : equal_rank_subsystems(RootSystem(SimpleType::parse(t)))) expect_valid(s);
}

TEST(Subsystems, TypeAOnlyForA) {
  auto subs = equal_rank_subsystems(RootSystem(SimpleType::parse("a5")));
  ASSERT_EQ(subs.size(), 1u);
  EXPECT_EQ(subs[0].signature(), "A5");
}

TEST(Subsystems, TypeAPick) {
  EXPECT_EQ(type_a_equal_rank(RootSystem(SimpleType::parse("b3"))).signature(), "A3");
  EXPECT_EQ(type_a_equal_rank(RootSystem(SimpleType::parse("c3"))).signature(), "A1+A1+A1");
  EXPECT_EQ(type_a_equal_rank(RootSystem(SimpleType::parse("e7"))).signature(), "A7");
  EXPECT_EQ(type_a_equal_rank(RootSystem(SimpleType::parse("g2"))).signature(), "A2");
  EXPECT_EQ(type_a_equal_rank(RootSystem(SimpleType::parse("e8"))).signature(), "A8");
  EXPECT_EQ(type_a_equal_rank(RootSystem(SimpleType::parse("d4"))).signature(), "A1+A1+A1+A1");
}

TEST(Subsystems, RestrictG2ToA2) {
  Subsystem s = type_a_equal_rank(RootSystem(SimpleType::parse("g2")));
  // every restricted weight is integral and the zero weight stays zero
  EXPECT_TRUE(s.restrict(Weight::zero(2)).is_zero());
  for (const auto& r : s.parent->all_root_weights()) {
    Weight w = s.restrict(r);
    EXPECT_EQ(w.coords.size(), 2u);
  }
}
