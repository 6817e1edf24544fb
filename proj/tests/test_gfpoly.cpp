#include <gtest/gtest.h>

#include <random>

#include "gkz/gfpoly.hpp"

using namespace gkz;

namespace {

GfPoly random_poly(std::mt19937_64& rng, std::uint32_t p, std::size_t nvars, int terms, Int maxdeg) {
  GfPoly f(p, nvars);
  for (int t = 0; t < terms; ++t) {
    ExponentVector u(nvars);
    for (auto& x : u) x = static_cast<Int>(rng() % (maxdeg + 1));
    f.add_term(u, static_cast<Int>(rng() % p));
  }
  return f;
}

}  // namespace

TEST(GfPoly, AdditionCancels) {
  GfPoly l1 = GfPoly::monomial(5, {1, 0}), l2 = GfPoly::monomial(5, {0, 1});
  EXPECT_EQ((l1 + l2) + l2.scaled(4), l1);
}

TEST(GfPoly, FreshmansDreamOverF2) {
  GfPoly s = GfPoly::monomial(2, {1, 0}) + GfPoly::monomial(2, {0, 1});
  EXPECT_EQ(s * s, GfPoly::monomial(2, {2, 0}) + GfPoly::monomial(2, {0, 2}));
}

TEST(GfPoly, ScaleByZero) { EXPECT_TRUE(GfPoly::monomial(7, {1, 2}, 3).scaled(0).is_zero()); }

TEST(GfPoly, CanonicalText) {
  GfPoly f = GfPoly::monomial(7, {3, 0}, 4) + GfPoly::monomial(7, {5, 2}, 2);
  EXPECT_EQ(f.to_string(), "4*l1^3 + 2*l1^5*l2^2");
  EXPECT_EQ(GfPoly(7, 2).to_string(), "0");
  EXPECT_EQ(GfPoly::constant(7, 2, -1).to_string(), "6");
  EXPECT_EQ(GfPoly::monomial(7, {1, 1}).to_string(), "l1*l2");
}

TEST(DerivativePower, Examples) {
  EXPECT_EQ(derivative_power(GfPoly::monomial(5, {3}), 0, 2), GfPoly::monomial(5, {1}));
  EXPECT_TRUE(derivative_power(GfPoly::monomial(5, {5}), 0, 1).is_zero());
  GfPoly f = GfPoly::monomial(3, {1, 1, 0, 0}) + GfPoly::monomial(3, {0, 0, 1, 1});
  EXPECT_EQ(derivative_power(f, 2, 1), GfPoly::monomial(3, {0, 0, 0, 1}));
}

TEST(FrobeniusTwist, Examples) {
  GfPoly f = GfPoly::monomial(3, {1, 0}) + GfPoly::monomial(3, {0, 1});
  EXPECT_EQ(frobenius_twist(f, 1), GfPoly::monomial(3, {3, 0}) + GfPoly::monomial(3, {0, 3}));
  EXPECT_EQ(frobenius_twist(GfPoly::constant(3, 2, 1), 4), GfPoly::constant(3, 2, 1));
  EXPECT_EQ(frobenius_twist(GfPoly::monomial(5, {1, 1}, 2), 2), GfPoly::monomial(5, {25, 25}, 2));
}

TEST(Evaluate, Examples) {
  GfPoly H = GfPoly::constant(5, 1, 1) + GfPoly::monomial(5, {1}, 4) + GfPoly::monomial(5, {2});
  EXPECT_EQ(H.evaluate(std::vector<std::uint32_t>{2}), 3u);
  GfPoly g = GfPoly::constant(7, 2, 5) + GfPoly::monomial(7, {1, 3}, 2);
  EXPECT_EQ(g.evaluate(std::vector<std::uint32_t>{0, 0}), 5u);
  EXPECT_EQ(GfPoly(7, 2).evaluate(std::vector<std::uint32_t>{3, 4}), 0u);
}

TEST(Evaluate, GridMatchesPointwise) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 7u, 13u}) {
    GfPoly f = random_poly(rng, p, 3, 8, 2 * p);
    auto grid = evaluate_on_grid(f);
    ASSERT_EQ(grid.size(), static_cast<std::size_t>(p) * p * p);
    for (std::uint64_t i = 0; i < grid.size(); ++i) EXPECT_EQ(grid[i], f.evaluate(grid_point(i, p, 3)));
  }
}

TEST(GfPolyProperties, RingAxioms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[trial % 4];
    GfPoly a = random_poly(rng, p, 2, 4, 3), b = random_poly(rng, p, 2, 4, 3), c = random_poly(rng, p, 2, 4, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(GfPolyProperties, IteratedDerivative) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    GfPoly f = random_poly(rng, 5, 2, 5, 9);
    for (Int k = 0; k <= 4; ++k) {
      GfPoly step = f;
      for (Int j = 0; j < k; ++j) step = derivative_power(step, 1, 1);
      EXPECT_EQ(derivative_power(f, 1, k), step);
    }
  }
}

TEST(GfPolyProperties, TwistIsPthPower) {
  std::mt19937_64 rng(9);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 10; ++trial) {
      GfPoly f = random_poly(rng, p, 2, 3, 3);
      EXPECT_EQ(frobenius_twist(f, 1), pow(f, p));
    }
  }
}

TEST(GfPoly, DegreeIn) {
  GfPoly f = GfPoly::monomial(5, {3, 1}) + GfPoly::monomial(5, {0, 4});
  EXPECT_EQ(f.degree_in(0), 3);
  EXPECT_EQ(f.degree_in(1), 4);
  EXPECT_EQ(GfPoly(5, 2).degree_in(0), -1);
}
