#include <gtest/gtest.h>

#include "gkz/kloosterman.hpp"
#include "gkz/oracle.hpp"

using namespace gkz;

TEST(PointCount, SmallExamples) {
  EXPECT_EQ(count_affine_zeros({3, 2, {{2, 0}, {0, 2}}, {1, 1}}), 1u);
  EXPECT_EQ(count_affine_zeros({5, 2, {{2, 0}, {0, 2}}, {1, 1}}), 9u);
  EXPECT_EQ(count_affine_zeros({7, 1, {{3}}, {1}}), 1u);
}

TEST(PointCount, RefusesOverBudget) {
  EXPECT_THROW(count_affine_zeros({7, 3, {{1, 0, 0}}, {1}}, 100), CapExhausted);
}

TEST(PointCountCongruence, DiagonalQuadric) {
  HypersurfaceSpec h{3, 2, {{2, 0}, {0, 2}}, {}};
  PointCountCheck c = example3_check(h, 40);
  EXPECT_FALSE(c.report.skipped);
  EXPECT_TRUE(c.report.ok());
  EXPECT_GE(c.report.checked, 9u);
  ASSERT_TRUE(c.hasse.has_value());
  // degenerate coefficient vector: x^2 = 0 has 3 solutions
  EXPECT_EQ((-c.hasse->H).evaluate(std::vector<std::uint32_t>{1, 0}), 0u);

  HypersurfaceSpec h5{5, 2, {{2, 0}, {0, 2}}, {}};
  EXPECT_TRUE(example3_check(h5, 40).report.ok());
}

TEST(PointCountCongruence, HypothesisFailureIsSkipped) {
  HypersurfaceSpec h{3, 2, {{3, 0}, {0, 3}}, {}};
  EXPECT_TRUE(example3_check(h, 40).report.skipped);
}

TEST(Katz, DiagonalQuadricP3) {
  HypersurfaceSpec h{3, 2, {{2, 0}, {0, 2}}, {}};
  KatzComparison k = katz_coefficient(h, {2, 2, 2}, 40);
  EXPECT_EQ(k.coefficient, GfPoly::monomial(3, {1, 1}, 2));
  EXPECT_EQ(k.scaled_F, k.coefficient);
  EXPECT_TRUE(katz_coefficient_check(h, 40).ok());
  EXPECT_TRUE(katz_coefficient_check({5, 2, {{2, 0}, {0, 2}}, {}}, 40).ok());
}

TEST(Legendre, InvariantAndCounts) {
  EXPECT_EQ(legendre_hasse(5), GfPoly::constant(5, 1, 1) + GfPoly::monomial(5, {1}, 4) + GfPoly::monomial(5, {2}));
  EXPECT_EQ(legendre_hasse(3), GfPoly::constant(3, 1, -1) + GfPoly::monomial(3, {1}, -1));
  EXPECT_EQ(legendre_hasse(3).evaluate(std::vector<std::uint32_t>{2}), 0u);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    OracleReport r = legendre_check(p);
    EXPECT_TRUE(r.ok()) << p;
    EXPECT_EQ(r.checked, p - 2);
  }
}

TEST(Crosscheck, Kloosterman) {
  const ASet K = kloosterman::a_set();
  EXPECT_TRUE(naive_crosscheck(K, {0}, 3, 2, 1).ok());
  for (Int e = 0; e < 24; ++e) EXPECT_TRUE(naive_crosscheck(K, {e}, 5, 2, 1).ok()) << e;
  EXPECT_TRUE(naive_crosscheck(ASet(std::vector<LatticeVector>{{1, -2}, {2, 1}, {-1, 0}}), {3, 1}, 5, 1, 2).ok());
  EXPECT_THROW(naive_crosscheck(K, {0}, 7, 4, 1), CapExhausted);
}

TEST(OracleThreads, ResultsIndependentOfThreadCount) {
  HypersurfaceSpec h{5, 3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}}, {}};
  set_oracle_threads(1);
  PointCountCheck one = example3_check(h, 40);
  set_oracle_threads(4);
  PointCountCheck four = example3_check(h, 40);
  set_oracle_threads(1);
  EXPECT_EQ(one.report.checked, four.report.checked);
  EXPECT_EQ(one.report.failures, four.report.failures);
}
