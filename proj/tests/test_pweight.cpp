#include <gtest/gtest.h>

#include <random>

#include "gkz/corpus.hpp"
#include "gkz/modp.hpp"
#include "gkz/pweight.hpp"

using namespace gkz;

namespace {
const ASet K({{1}, {-1}});

// Test-side oracle: scan {0..q-1}^N directly.
std::vector<ExponentVector> naive_U_M(const ASet& A, const LatticeVector& e, Int q) {
  std::vector<ExponentVector> out;
  const std::size_t N = A.size();
  ExponentVector u(N, 0);
  while (true) {
    LatticeVector s = A.combine(u);
    bool ok = true;
    for (std::size_t j = 0; j < s.size(); ++j) ok &= floor_mod(s[j] - e[j], q - 1) == 0;
    if (ok) out.push_back(u);
    std::size_t i = N;
    while (i-- > 0) {
      if (++u[i] < q) break;
      u[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}
}  // namespace

TEST(Digits, ForcedExpansion) {
  DigitDecomposition d = digits(K, {7, 5}, 3, 2);
  EXPECT_EQ(d.digits[0], (ExponentVector{1, 2}));
  EXPECT_EQ(d.digits[1], (ExponentVector{2, 1}));
  EXPECT_EQ(d.gammas[0], (LatticeVector{-1}));
  EXPECT_EQ(d.gammas[1], (LatticeVector{1}));
  EXPECT_EQ(d.pweight, 6);
}

TEST(Digits, TopAndZero) {
  const ASet A = corpus::cone();
  DigitDecomposition top = digits(A, {8, 8, 8, 8}, 3, 2);
  EXPECT_EQ(top.pweight, 4 * 2 * 2);
  DigitDecomposition zero = digits(A, {0, 0, 0, 0}, 3, 2);
  EXPECT_EQ(zero.pweight, 0);
  for (const auto& g : zero.gammas) EXPECT_EQ(g, (LatticeVector{0, 0, 0}));
}

TEST(EnumerateUM, KloostermanQ9) {
  auto U = enumerate_U_M(K, MSpec::toric({0}, 3, 2));
  std::vector<ExponentVector> expected;
  for (Int u = 0; u <= 8; ++u) expected.push_back({u, u});
  expected.push_back({0, 8});
  expected.push_back({8, 0});
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(U, expected);
}

TEST(EnumerateUM, EmptyWhenClassUnreachable) { EXPECT_TRUE(enumerate_U_M(ASet(std::vector<LatticeVector>{{4}}), MSpec::toric({1}, 5, 1)).empty()); }

TEST(EnumerateUM, KloostermanQ5) {
  auto U = enumerate_U_M(K, MSpec::toric({2}, 5, 1));
  EXPECT_EQ(U, (std::vector<ExponentVector>{{0, 2}, {1, 3}, {2, 0}, {2, 4}, {3, 1}, {4, 2}}));
}

TEST(WpMin, Examples) {
  auto m9 = wp_min(enumerate_U_M(K, MSpec::toric({0}, 3, 2)), 3, 2);
  EXPECT_EQ(m9.wp, 0);
  EXPECT_EQ(m9.minimizers, (std::vector<ExponentVector>{{0, 0}}));
  auto m5 = wp_min(enumerate_U_M(K, MSpec::toric({2}, 5, 1)), 5, 1);
  EXPECT_EQ(m5.wp, 2);
  EXPECT_EQ(m5.minimizers, (std::vector<ExponentVector>{{0, 2}, {2, 0}}));
  auto m7 = wp_min(enumerate_U_M(K, MSpec::toric({1}, 7, 1)), 7, 1);
  EXPECT_EQ(m7.wp, 1);
  EXPECT_EQ(m7.minimizers, (std::vector<ExponentVector>{{1, 0}}));
  EXPECT_THROW(wp_min({}, 3, 1), InputError);
}

TEST(GammaSequences, KloostermanCase5) {
  MSpec spec = MSpec::toric({3}, 5, 2);
  auto seqs = gamma_sequences(K, spec, wp_min(enumerate_U_M(K, spec), 5, 2), 40);
  ASSERT_EQ(seqs.size(), 2u);
  EXPECT_EQ(seqs[0].gammas, (std::vector<LatticeVector>{{-2}, {1}}));
  EXPECT_EQ(seqs[1].gammas, (std::vector<LatticeVector>{{3}, {0}}));
}

TEST(GammaSequences, KloostermanZeroTwist) {
  MSpec spec = MSpec::toric({0}, 3, 2);
  auto seqs = gamma_sequences(K, spec, wp_min(enumerate_U_M(K, spec), 3, 2), 40);
  ASSERT_EQ(seqs.size(), 1u);
  EXPECT_EQ(seqs[0].gammas, (std::vector<LatticeVector>{{0}, {0}}));
  EXPECT_EQ(seqs[0].members, (std::vector<ExponentVector>{{0, 0}}));
}

TEST(GammaSequences, KloostermanCase7) {
  MSpec spec = MSpec::toric({2 + 2 * 5}, 5, 2);
  auto seqs = gamma_sequences(K, spec, wp_min(enumerate_U_M(K, spec), 5, 2), 40);
  ASSERT_EQ(seqs.size(), 2u);
  EXPECT_EQ(seqs[0].gammas, (std::vector<LatticeVector>{{-2}, {-2}}));
  EXPECT_EQ(seqs[1].gammas, (std::vector<LatticeVector>{{2}, {2}}));
}

TEST(PWeightProperties, AssemblyAndEqualityCriterion) {
  for (const auto& inst : corpus::toric_instances()) {
    MSpec spec = MSpec::toric(inst.e, inst.p, inst.a);
    auto U = enumerate_U_M(inst.A, spec);
    const Int q = checked_pow(inst.p, inst.a);
    EXPECT_EQ(U, naive_U_M(inst.A, inst.e, q)) << inst.name;
    for (const auto& u : U) {
      DigitDecomposition d = digits(inst.A, u, inst.p, inst.a);
      LatticeVector assembled(inst.A.dim(), 0);
      Int pk = 1;
      for (const auto& g : d.gammas) {
        for (std::size_t j = 0; j < g.size(); ++j) assembled[j] += pk * g[j];
        pk *= inst.p;
      }
      EXPECT_EQ(assembled, inst.A.combine(u)) << inst.name;
      EXPECT_TRUE(weight_equality(inst.A, d, 100).consistent()) << inst.name << " " << to_string(u);
    }
  }
}

TEST(PWeightProperties, AffineLayersPartitionTheBox) {
  for (const auto& inst : corpus::affine_instances()) {
    auto layers = enumerate_U_M_layers(inst.A, inst.e, inst.p, inst.a, inst.m);
    std::vector<ExponentVector> all;
    for (std::size_t l = 0; l < layers.size(); ++l) {
      for (const auto& u : layers[l]) {
        EXPECT_EQ(affine_support(inst.A.combine(u), inst.m), l);
        all.push_back(u);
      }
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, naive_U_M(inst.A, inst.e, checked_pow(inst.p, inst.a))) << inst.name;
  }
}
