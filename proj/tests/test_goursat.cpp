#include <gtest/gtest.h>

#include "charlattice/goursat.hpp"

using namespace charlattice;

namespace {
SimpleType A(int n) { return SimpleType(Family::A, n); }
}  // namespace

TEST(Goursat, Rank) {
  EXPECT_EQ(goursat_rank({{A(1), A(1)}, {{0, 1}}}), 1u);
  EXPECT_EQ(goursat_rank({{A(1), A(1)}, {{0}, {1}}}), 2u);
  EXPECT_EQ(goursat_rank({{A(2), A(2), A(3)}, {{0, 1}, {2}}}), 5u);
}

TEST(Goursat, Malformed) {
  EXPECT_THROW(goursat_rank({{A(1), A(2)}, {{0, 1}}}), PreconditionError);
  EXPECT_THROW(goursat_rank({{A(1), A(1)}, {{0}}}), PreconditionError);
  EXPECT_THROW(goursat_rank({{A(1), A(1)}, {{0, 1}, {1}}}), PreconditionError);
  EXPECT_THROW(goursat_rank({{A(1)}, {{3}}}), PreconditionError);
}

TEST(Goursat, Lemma) {
  auto r = verify_goursat_lemma({A(1), A(1)});
  EXPECT_EQ(r.specs_checked, 2u);
  EXPECT_TRUE(r.holds());
  auto r3 = verify_goursat_lemma({A(2), A(2), A(2)});
  EXPECT_EQ(r3.specs_checked, 5u);  // Bell number B3
  EXPECT_TRUE(r3.holds());
  auto mixed = verify_goursat_lemma({A(1), A(2)});
  EXPECT_EQ(mixed.specs_checked, 1u);
  EXPECT_TRUE(mixed.holds());
  EXPECT_THROW(verify_goursat_lemma(std::vector<SimpleType>(7, A(1))), ResourceLimitError);
}

TEST(Goursat, MergingLowersRank) {
  for (const auto& spec : goursat_specs({A(1), A(1), A(2), A(2), A(1)}))
    for (std::size_t i = 0; i < spec.blocks.size(); ++i)
      for (std::size_t j = i + 1; j < spec.blocks.size(); ++j) {
        if (spec.factors[spec.blocks[i][0]] != spec.factors[spec.blocks[j][0]]) continue;
        GoursatSpec merged = spec;
        merged.blocks[i].insert(merged.blocks[i].end(), spec.blocks[j].begin(), spec.blocks[j].end());
        merged.blocks.erase(merged.blocks.begin() + long(j));
        EXPECT_LT(goursat_rank(merged), goursat_rank(spec));
      }
}
