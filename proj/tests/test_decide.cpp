#include "torusrank/corpus.hpp"
#include "torusrank/decide.hpp"

#include <gtest/gtest.h>

using namespace torusrank;

namespace {

const Mat kThreeCycle{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};

}  // namespace

TEST(Decide, IdentityIsFullRankWithZeroModulus) {
  const Decision dec = decide_full_rank(Mat::identity(3));
  EXPECT_EQ(dec.verdict, Verdict::FullRank);
  EXPECT_EQ(dec.d, 0);
  EXPECT_EQ(dec.witness(), nullptr);
  EXPECT_TRUE(dec.verification_hash.empty());
  EXPECT_EQ(dec.rank_statement(), "rank(Z^3⋊Z) = 4");
}

TEST(Decide, DiagonalReflection) {
  const Decision dec = decide_full_rank(Mat{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  EXPECT_EQ(dec.verdict, Verdict::FullRank);
  EXPECT_EQ(dec.d, 2);
}

TEST(Decide, ThreeCycleIsNotFullRank) {
  const Decision dec = decide_full_rank(kThreeCycle);
  EXPECT_EQ(dec.verdict, Verdict::NotFullRank);
  EXPECT_EQ(dec.d, 1);
  ASSERT_NE(dec.witness(), nullptr);
  EXPECT_EQ(dec.witness()->set.size(), 2u);
  EXPECT_TRUE(dec.witness()->verified);
  EXPECT_EQ(dec.verification_hash, witness_hash(kThreeCycle, dec.witness()->set));
  EXPECT_EQ(dec.rank_statement(), "rank(Z^3⋊Z) ≤ 3");
}

TEST(Decide, Preconditions) {
  EXPECT_THROW(decide_full_rank(Mat{{0, 1}, {1, 0}}), PreconditionError);
  EXPECT_THROW(decide_full_rank(Mat{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), PreconditionError);
  EXPECT_THROW(decide_full_rank(Mat(2, 3)), DimensionError);
  const Decision one = decide_full_rank(Mat{{-1}});
  EXPECT_EQ(one.verdict, Verdict::FullRank);
  EXPECT_EQ(one.d, 0);
}

TEST(Decide, ObstructionCongruenceHoldsOnEveryFullRankAnswer) {
  CorpusRng rng(90);
  int full = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng.below(2);
    Mat a = random_unimodular(n, rng.below(8), rng);
    const Decision dec = decide_full_rank(a, {.verify = true});
    if (dec.verdict == Verdict::FullRank) {
      EXPECT_NE(dec.d, 1);
      EXPECT_TRUE(check_mod_d_obstruction(a, dec.d));
      ++full;
    } else {
      EXPECT_TRUE(is_generating(a, dec.witness()->set));
      EXPECT_EQ(dec.witness()->set.size(), n - 1);
    }
  }
  EXPECT_GT(full, 0);
}

TEST(Decide, ConjugationAndShiftInvariance) {
  CorpusRng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng.below(2);
    const Mat a = random_unimodular(n, 12, rng);
    const Mat x = random_unimodular(n, 12, rng);
    const Mat b = x * a * unimodular_inverse(x);
    EXPECT_EQ(decide_full_rank(a).verdict, decide_full_rank(b).verdict);
    EXPECT_EQ(criterion_gcd(a), criterion_gcd(b));
    const long lambda = rng.in_range(-5, 5);
    EXPECT_EQ(criterion_gcd(a), criterion_gcd(shift_diagonal(a, lambda)));
  }
}

TEST(Decide, NoVerifyMarksWitnessUnverified) {
  const Decision dec = decide_full_rank(kThreeCycle, {.verify = false});
  ASSERT_NE(dec.witness(), nullptr);
  EXPECT_FALSE(dec.witness()->verified);
}

TEST(CyclicSearch, Examples) {
  EXPECT_EQ(cyclic_search(kThreeCycle, 1), ColVec({1, 0, 0}));
  EXPECT_FALSE(cyclic_search(Mat::identity(3), 2).has_value());
  // companion of x^3 - 2x^2 + 5x - 1
  const Mat companion{{0, 0, 1}, {1, 0, -5}, {0, 1, 2}};
  EXPECT_EQ(cyclic_search(companion, 1), ColVec({1, 0, 0}));
}

TEST(CyclicSearch, FoundVectorGeneratesAlone) {
  CorpusRng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Mat a = random_unimodular(3, 10, rng);
    if (const auto v = cyclic_search(a, 1)) {
      EXPECT_TRUE(is_generating(a, OrbitSet({*v})));
      EXPECT_EQ(criterion_gcd(a), 1);
    }
  }
}
