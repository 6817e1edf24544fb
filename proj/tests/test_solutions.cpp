#include <gtest/gtest.h>

#include "gkz/corpus.hpp"
#include "gkz/solutions.hpp"

using namespace gkz;

namespace {
const ASet K({{1}, {-1}});

GfPoly mono(std::uint32_t p, ExponentVector u, Int c = 1) { return GfPoly::monomial(p, std::move(u), c); }
}  // namespace

TEST(BuildF, ConeConfiguration) {
  const ASet A = corpus::cone();
  EXPECT_EQ(build_F(A, {1, 1, 0}, 3, 20), mono(3, {1, 1, 0, 0}) + mono(3, {0, 0, 1, 1}));
  EXPECT_EQ(build_F(A, {2, 2, 0}, 5, 20),
            mono(5, {2, 2, 0, 0}, 4) + mono(5, {1, 1, 1, 1}) + mono(5, {0, 0, 2, 2}, 4));
  EXPECT_EQ(build_F(A, {0, 0, 0}, 5, 20), GfPoly::constant(5, 4, 1));
}

TEST(BuildG, Cases) {
  const ASet A = corpus::cone();
  EXPECT_EQ(build_G(A, {1, 1, 0}, 3, 20), mono(3, {1, 1, 0, 0}) + mono(3, {0, 0, 1, 1}));
  EXPECT_EQ(build_G(A, {0, 0, 0}, 3, 20), GfPoly::constant(3, 4, 1));
  EXPECT_THROW(build_G(K, {1}, 5, 20), InputError);
}

TEST(EulerResidual, Cases) {
  const ASet A = corpus::cone();
  for (const auto& r : euler_residual(A, {1, 1, 0}, build_F(A, {1, 1, 0}, 3, 20))) EXPECT_TRUE(r.is_zero());
  auto res = euler_residual(K, {0}, mono(5, {1, 0}));
  ASSERT_EQ(res.size(), 1u);
  EXPECT_EQ(res[0], mono(5, {1, 0}));
  for (const auto& r : euler_residual(K, {0}, GfPoly(5, 2))) EXPECT_TRUE(r.is_zero());
}

TEST(BoxResidual, Cases) {
  const ASet A = corpus::cone();
  GfPoly F = mono(3, {1, 1, 0, 0}) + mono(3, {0, 0, 1, 1});
  BoxOperator bal = BoxOperator::make(A, {-1, -1, 1, 1}, BoxKind::Normalized);
  EXPECT_EQ(bal.branch(), BoxBranch::Balanced);
  EXPECT_TRUE(box_residual(bal, F).is_zero());

  BoxOperator pos = BoxOperator::make(K, {1, 1}, BoxKind::Normalized);
  EXPECT_EQ(pos.branch(), BoxBranch::PositiveSum);
  EXPECT_TRUE(box_residual(pos, mono(5, {3, 0})).is_zero());
  EXPECT_TRUE(box_residual(pos, GfPoly::constant(5, 2, 4)).is_zero());

  EXPECT_THROW(BoxOperator::make(K, {1, 0}, BoxKind::Normalized), InputError);
}

TEST(BoxResidual, DetectsNonSolution) {
  const ASet A = corpus::cone();
  BoxOperator bal = BoxOperator::make(A, {-1, -1, 1, 1}, BoxKind::Classical);
  EXPECT_FALSE(box_residual(bal, mono(3, {1, 1, 0, 0})).is_zero());
}

TEST(RelationTestSet, ConeConfigurationHasBothSigns) {
  auto ops = relation_test_set(corpus::cone(), {1, 1, 0}, 3);
  auto has = [&](const RelationVector& l) {
    return std::any_of(ops.begin(), ops.end(), [&](const BoxOperator& o) { return o.l == l; });
  };
  EXPECT_TRUE(has({-1, -1, 1, 1}));
  EXPECT_TRUE(has({1, 1, -1, -1}));
}

TEST(RelationTestSet, TrivialKernelIsEmpty) {
  EXPECT_TRUE(relation_test_set(ASet(std::vector<LatticeVector>{{1, 0}, {0, 1}}), {1, 1}, 3).empty());
}

TEST(RelationTestSet, KloostermanDifferences) {
  auto ops = relation_test_set(K, {2}, 5);
  auto has = [&](const RelationVector& l) {
    return std::any_of(ops.begin(), ops.end(), [&](const BoxOperator& o) { return o.l == l; });
  };
  for (const RelationVector& l : std::vector<RelationVector>{{1, 1}, {-1, -1}, {2, 2}, {-2, -2}}) EXPECT_TRUE(has(l));
}

TEST(SolutionBasis, KloostermanP5) {
  SolutionBasis b = solution_basis(K, {2}, 5, 20);
  ASSERT_EQ(b.elements.size(), 2u);
  EXPECT_EQ(b.elements[0].gamma, (LatticeVector{-3}));
  EXPECT_EQ(b.elements[0].F, mono(5, {0, 3}));
  EXPECT_EQ(b.elements[1].gamma, (LatticeVector{2}));
  EXPECT_EQ(b.elements[1].F, mono(5, {2, 0}, 3));
  EXPECT_TRUE(b.all_checks_pass());
  EXPECT_TRUE(b.very_good.empty());
}

TEST(SolutionBasis, ConeConfigurationP3) {
  SolutionBasis b = solution_basis(corpus::cone(), {1, 1, 0}, 3, 20);
  EXPECT_TRUE(b.all_checks_pass());
  auto it = std::find_if(b.elements.begin(), b.elements.end(),
                         [](const BasisElement& e) { return e.gamma == LatticeVector{1, 1, 0}; });
  ASSERT_NE(it, b.elements.end());
  EXPECT_EQ(it->F, mono(3, {1, 1, 0, 0}) + mono(3, {0, 0, 1, 1}));
  // nonconfluent configuration: classical and normalized residuals agree
  ASSERT_TRUE(it->classical_agrees.has_value());
  EXPECT_TRUE(*it->classical_agrees);
}

TEST(SolutionBasis, EmptyResidueClass) {
  SolutionBasis b = solution_basis(ASet(std::vector<LatticeVector>{{3}}), {1}, 3, 10);
  EXPECT_TRUE(b.elements.empty());
}

TEST(SolutionBasis, CorpusMembershipAndIndependence) {
  for (const auto& inst : corpus::solution_instances()) {
    SolutionBasis b = solution_basis(inst.A, inst.beta, inst.p, 4 * static_cast<Int>(inst.A.size()) * (inst.p - 1));
    EXPECT_TRUE(b.all_checks_pass()) << inst.name;
    EXPECT_TRUE(b.disjoint_supports) << inst.name;
    for (const auto& e : b.elements) {
      if (e.classical_agrees) EXPECT_TRUE(*e.classical_agrees) << inst.name;
    }
  }
}
