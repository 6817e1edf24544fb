#include <gtest/gtest.h>

#include "gkz/corpus.hpp"
#include "gkz/lattice.hpp"

using namespace gkz;

namespace {
const ASet K({{1}, {-1}});
}

TEST(SemigroupMember, NonPointedWitnessIsMinimal) {
  Membership m = semigroup_member(K, {3}, 10);
  ASSERT_EQ(m.status, SearchStatus::Found);
  EXPECT_EQ(*m.witness, (ExponentVector{3, 0}));
}

TEST(SemigroupMember, ZeroTarget) {
  Membership m = semigroup_member(corpus::cone(), {0, 0, 0}, 10);
  ASSERT_EQ(m.status, SearchStatus::Found);
  EXPECT_EQ(*m.witness, (ExponentVector{0, 0, 0, 0}));
}

TEST(SemigroupMember, ConeConfigurationWitnessReconstructs) {
  const ASet A = corpus::cone();
  Membership m = semigroup_member(A, {2, 2, 0}, 10);
  ASSERT_EQ(m.status, SearchStatus::Found);
  EXPECT_EQ(A.combine(*m.witness), (LatticeVector{2, 2, 0}));
}

TEST(SemigroupMember, PointedNonMemberIsDecided) {
  EXPECT_EQ(semigroup_member(ASet(std::vector<LatticeVector>{{2}}), {3}, 10).status, SearchStatus::NotMember);
  EXPECT_EQ(semigroup_member(ASet(std::vector<LatticeVector>{{1, 0}, {0, 1}}), {-1, 0}, 10).status, SearchStatus::NotMember);
}

TEST(WeightAndMinimals, NegativeTargetOnKloosterman) {
  WeightReport r = weight_and_minimals(K, {-4}, 20);
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.weight, 4);
  EXPECT_EQ(r.minimals, (std::vector<ExponentVector>{{0, 4}}));
}

TEST(WeightAndMinimals, ConeConfigurationP5) {
  WeightReport r = weight_and_minimals(corpus::cone(), {2, 2, 0}, 20);
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.weight, 4);
  EXPECT_EQ(r.minimals, (std::vector<ExponentVector>{{0, 0, 2, 2}, {1, 1, 1, 1}, {2, 2, 0, 0}}));
}

TEST(WeightAndMinimals, ZeroTarget) {
  WeightReport r = weight_and_minimals(corpus::cone(), {0, 0, 0}, 5);
  EXPECT_EQ(r.weight, 0);
  EXPECT_EQ(r.minimals, (std::vector<ExponentVector>{{0, 0, 0, 0}}));
}

TEST(EnumerateBox, KloostermanZeroFiber) {
  auto box = enumerate_box(K, {0}, 8);
  std::vector<ExponentVector> expected;
  for (Int u = 0; u <= 8; ++u) expected.push_back({u, u});
  EXPECT_EQ(box, expected);
}

TEST(EnumerateBox, ConeConfigurationP3) {
  auto box = enumerate_box(corpus::cone(), {1, 1, 0}, 2);
  EXPECT_EQ(box, (std::vector<ExponentVector>{{0, 0, 1, 1}, {1, 1, 0, 0}}));
}

TEST(EnumerateBox, UnreachableTargetIsEmpty) { EXPECT_TRUE(enumerate_box(ASet(std::vector<LatticeVector>{{2}}), {3}, 5).empty()); }

TEST(ClassifyGoodness, ExampleBetaVeryGood) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    Goodness g = classify_goodness(corpus::cone(), corpus::cone_beta(p), p, 40);
    EXPECT_TRUE(g.good) << p;
    EXPECT_TRUE(g.very_good) << p;
  }
}

TEST(ClassifyGoodness, KloostermanCases) {
  Goodness big = classify_goodness(K, {5}, 5, 20);
  EXPECT_FALSE(big.good);
  Goodness one = classify_goodness(K, {1}, 5, 20);
  EXPECT_TRUE(one.good);
  EXPECT_FALSE(one.very_good);
}

TEST(ClassifyGoodness, RejectsNonMembers) { EXPECT_THROW(classify_goodness(ASet(std::vector<LatticeVector>{{2}}), {1}, 3, 5), InputError); }

TEST(SigmaTau, KloostermanP5) {
  GoodnessCatalog c = sigma_tau(K, {2}, 5, 20);
  ASSERT_EQ(c.sigma.size(), 2u);
  EXPECT_EQ(c.sigma[0].first, (LatticeVector{-3}));
  EXPECT_EQ(c.sigma[1].first, (LatticeVector{2}));
  EXPECT_EQ(c.sigma[0].second.weight, 3);
  EXPECT_EQ(c.sigma[1].second.weight, 2);
  EXPECT_TRUE(c.tau.empty());
}

TEST(SigmaTau, ConeConfigurationP3) {
  GoodnessCatalog c = sigma_tau(corpus::cone(), {1, 1, 0}, 3, 20);
  bool in_sigma = false;
  for (const auto& [g, r] : c.sigma) in_sigma |= g == LatticeVector{1, 1, 0};
  EXPECT_TRUE(in_sigma);
  EXPECT_NE(std::find(c.tau.begin(), c.tau.end(), LatticeVector{1, 1, 0}), c.tau.end());
}

TEST(SigmaTau, EvenGeneratorStillReachesTheClass) {
  // 4 = 2*2 lies in 1 + 3Z with digit 2 <= p-1, so the catalog is not empty
  GoodnessCatalog c = sigma_tau(ASet(std::vector<LatticeVector>{{2}}), {1}, 3, 10);
  ASSERT_EQ(c.sigma.size(), 1u);
  EXPECT_EQ(c.sigma[0].first, (LatticeVector{4}));
  EXPECT_EQ(c.tau, (std::vector<LatticeVector>{{4}}));
}

TEST(SigmaTau, EmptyCatalog) {
  GoodnessCatalog c = sigma_tau(ASet(std::vector<LatticeVector>{{3}}), {1}, 3, 10);
  EXPECT_TRUE(c.sigma.empty());
  EXPECT_TRUE(c.tau.empty());
}

TEST(RelationKernel, Bases) {
  RelationLattice L = relation_kernel_basis(K);
  ASSERT_EQ(L.basis.size(), 1u);
  EXPECT_EQ(L.basis[0], (RelationVector{1, 1}));

  RelationLattice E = relation_kernel_basis(corpus::cone());
  ASSERT_EQ(E.basis.size(), 1u);
  const auto& b = E.basis[0];
  EXPECT_TRUE(b == (RelationVector{-1, -1, 1, 1}) || b == (RelationVector{1, 1, -1, -1}));

  EXPECT_TRUE(relation_kernel_basis(ASet(std::vector<LatticeVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).basis.empty());
}

TEST(NonconfluenceForm, Cases) {
  auto h = nonconfluence_form(corpus::cone());
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(*h, (linear::RationalVector{1, 1, 1}));
  EXPECT_FALSE(nonconfluence_form(K).has_value());
  auto h2 = nonconfluence_form(ASet(std::vector<LatticeVector>{{1, 0}, {0, 1}}));
  ASSERT_TRUE(h2.has_value());
  EXPECT_EQ(*h2, (linear::RationalVector{1, 1}));
}
