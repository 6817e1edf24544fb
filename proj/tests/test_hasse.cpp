#include <gtest/gtest.h>

#include "gkz/corpus.hpp"
#include "gkz/hasse.hpp"
#include "gkz/kloosterman.hpp"
#include "gkz/oracle.hpp"

using namespace gkz;

namespace {
const ASet K({{1}, {-1}});
}

TEST(HasseToric, KloostermanQP) {
  HasseResult r = hasse_toric(K, {2}, 7, 1, 40);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.H, GfPoly::monomial(7, {2, 0}, 3));
  EXPECT_EQ(r.C, 2);

  HasseResult mid = hasse_toric(K, {2}, 5, 1, 40);
  EXPECT_EQ(mid.H, GfPoly::monomial(5, {2, 0}, 2) + GfPoly::monomial(5, {0, 2}, 2));
}

TEST(HasseToric, KloostermanCase5) {
  HasseResult r = hasse_toric(K, {3}, 5, 2, 40);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.H, GfPoly::monomial(5, {3, 0}, 4) + GfPoly::monomial(5, {5, 2}, 2));
  EXPECT_EQ(r.H.to_string(), "4*l1^3 + 2*l1^5*l2^2");
}

TEST(HasseToric, EmptyClass) {
  HasseResult r = hasse_toric(ASet(std::vector<LatticeVector>{{4}}), {1}, 5, 1, 40);
  EXPECT_TRUE(r.empty);
  EXPECT_TRUE(r.H.is_zero());
}

TEST(HasseToric, TablesForAllTwists) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (Int e = 0; e + 1 < static_cast<Int>(p); ++e) {
      EXPECT_EQ(hasse_toric(K, {e}, p, 1, 40).H, kloosterman::hasse_q_p(p, e)) << p << " " << e;
    }
    const Int q = static_cast<Int>(p) * p;
    for (Int e = 0; e < q - 1; ++e) {
      HasseResult r = hasse_toric(K, {e}, p, 2, 80);
      EXPECT_EQ(r.H, kloosterman::hasse_q_p2(p, e % p, e / p)) << p << " " << e;
    }
  }
}

TEST(HasseToric, ProductFormMatchesDirectFormAndDegreeBound) {
  for (const auto& inst : corpus::toric_instances()) {
    HasseResult r = hasse_toric(inst.A, inst.e, inst.p, inst.a, 200);
    EXPECT_TRUE(r.verified) << inst.name;
    EXPECT_EQ(r.H, r.direct) << inst.name;
    for (std::size_t i = 0; i < inst.A.size(); ++i) EXPECT_LE(r.H.degree_in(i), r.q - 1) << inst.name;
  }
}

TEST(HasseAffine, DiagonalQuadricP3) {
  HypersurfaceSpec h{3, 2, {{2, 0}, {0, 2}}, {}};
  HasseResult r = hasse_affine(augmented_configuration(h), {0, 0, 0}, 3, 1, 0, 40);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.contributing_layers, (std::vector<std::size_t>{3}));
  // N_aff(x^2 + y^2) = 1 over F_3, and the congruence reads N_aff = -H
  EXPECT_EQ((-r.H).evaluate(std::vector<std::uint32_t>{1, 1}), 1u);
}

TEST(HasseAffine, RejectsCoordinateHyperplane) {
  EXPECT_THROW(hasse_affine(ASet(std::vector<LatticeVector>{{1, 0}}), {0, 0}, 3, 1, 1, 20), InputError);
}

TEST(HasseAffine, RejectsTwistInAffineSlot) {
  EXPECT_THROW(hasse_affine(ASet(std::vector<LatticeVector>{{1, 1}, {1, 0}}), {0, 1}, 3, 1, 1, 20), InputError);
}

TEST(HasseAffine, LayerBoundOnCorpus) {
  for (const auto& inst : corpus::affine_instances()) {
    HasseResult r = hasse_affine(inst.A, inst.e, inst.p, inst.a, inst.m, 200);
    EXPECT_TRUE(r.verified) << inst.name;
    for (const auto& L : r.layers) {
      if (!L.empty) EXPECT_TRUE(L.lemma_holds) << inst.name << " layer " << L.l;
    }
    EXPECT_FALSE(r.contributing_layers.empty()) << inst.name;
  }
}

TEST(Kloosterman, CaseLabels) {
  EXPECT_EQ(*kloosterman::case_label(K, 7, 1, 2), "q=p, e<(p-1)/2");
  EXPECT_EQ(*kloosterman::case_label(K, 5, 2, 3), "q=p^2, Case 5");
  EXPECT_FALSE(kloosterman::case_label(ASet(std::vector<LatticeVector>{{1}, {2}}), 5, 1, 1).has_value());
}
