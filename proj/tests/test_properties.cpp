// Randomized invariants over the fixed corpus and seeded random configurations.
#include <gtest/gtest.h>

#include <random>

#include "gkz/corpus.hpp"
#include "gkz/lattice.hpp"
#include "gkz/series0.hpp"

using namespace gkz;

namespace {

// All u with |u| = w and target A u = beta, by direct enumeration.
std::vector<ExponentVector> fiber_at_weight(const ASet& A, const LatticeVector& beta, Int w) {
  std::vector<ExponentVector> out;
  ExponentVector u(A.size(), 0);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
    if (i + 1 == A.size()) {
      u[i] = left;
      if (A.combine(u) == beta) out.push_back(u);
      return;
    }
    for (Int x = 0; x <= left; ++x) {
      u[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> sample_targets(const ASet& A, std::mt19937_64& rng, int count) {
  std::vector<LatticeVector> out;
  for (int k = 0; k < count; ++k) {
    std::vector<Int> u(A.size());
    for (auto& x : u) x = static_cast<Int>(rng() % 4);
    out.push_back(A.combine(u));
  }
  return out;
}

}  // namespace

TEST(LatticeProperties, WeightIsExactAndMinimalsComplete) {
  std::mt19937_64 rng(21);
  auto configs = corpus::random_configurations(6);
  configs.push_back(corpus::cone());
  for (const ASet& A : configs) {
    for (const auto& beta : sample_targets(A, rng, 4)) {
      WeightReport r = weight_and_minimals(A, beta, 40);
      ASSERT_EQ(r.status, SearchStatus::Found);
      for (Int w = 0; w < r.weight; ++w) EXPECT_TRUE(fiber_at_weight(A, beta, w).empty()) << to_string(beta);
      EXPECT_EQ(r.minimals, fiber_at_weight(A, beta, r.weight)) << to_string(beta);
    }
  }
}

TEST(LatticeProperties, MinimalWeightCandidatesAreGood) {
  for (const auto& inst : corpus::solution_instances()) {
    if (!inst.A.pointed()) continue;
    GoodnessCatalog cat = sigma_tau(inst.A, inst.beta, inst.p, 60);
    // Every candidate of least weight in the class must appear among the good points.
    std::vector<std::pair<Int, LatticeVector>> candidates;
    std::vector<Int> c(inst.A.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == c.size()) {
        LatticeVector g = inst.A.combine(c);
        if (congruent(g, inst.beta, inst.p)) candidates.emplace_back(weight_and_minimals(inst.A, g, 60).weight, g);
        return;
      }
      for (c[i] = 0; c[i] < static_cast<Int>(inst.p); ++c[i]) rec(i + 1);
    };
    rec(0);
    if (candidates.empty()) continue;
    const Int least = std::min_element(candidates.begin(), candidates.end())->first;
    for (const auto& [w, g] : candidates) {
      if (w != least) continue;
      bool found = std::any_of(cat.sigma.begin(), cat.sigma.end(), [&](const auto& e) { return e.first == g; });
      EXPECT_TRUE(found) << inst.name << " " << to_string(g);
    }
  }
}

TEST(LatticeProperties, VeryGoodMeansNoLargeEntries) {
  for (const auto& inst : corpus::solution_instances()) {
    if (!inst.A.pointed()) continue;
    GoodnessCatalog cat = sigma_tau(inst.A, inst.beta, inst.p, 60);
    for (const auto& g : cat.tau) {
      for (const auto& u : enumerate_box(inst.A, g, 3 * static_cast<Int>(inst.p))) {
        for (Int x : u) EXPECT_LT(x, static_cast<Int>(inst.p)) << inst.name << " " << to_string(g);
      }
    }
  }
}

TEST(LatticeProperties, KernelBasisSpansFiberDifferences) {
  std::mt19937_64 rng(22);
  auto configs = corpus::random_configurations(6);
  configs.push_back(corpus::cone());
  for (const ASet& A : configs) {
    RelationLattice L = relation_kernel_basis(A);
    for (const auto& l : L.basis) {
      EXPECT_EQ(A.combine(l), LatticeVector(A.dim(), 0));
    }
    for (const auto& beta : sample_targets(A, rng, 3)) {
      auto box = enumerate_box(A, beta, 4);
      for (std::size_t i = 1; i < box.size(); ++i) {
        std::vector<Int> diff(A.size());
        for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = box[i][k] - box[0][k];
        auto coords = linear::coordinates_in_span(L.basis, diff);
        ASSERT_TRUE(coords.has_value());
        for (const auto& c : *coords) EXPECT_EQ(boost::multiprecision::denominator(c), 1);
      }
    }
  }
}

TEST(SeriesProperties, PiRationalNormalizationIsCanonical) {
  std::mt19937_64 rng(23);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int t = 0; t < 50; ++t) {
      Rational v(static_cast<Int>(rng() % 19) - 9, static_cast<Int>(rng() % 7) + 1);
      Int e = static_cast<Int>(rng() % 21) - 10;
      PiRational x(p, v, e);
      EXPECT_EQ(PiRational(p, x.value(), x.pi_exp()), x);
      if (!x.is_zero()) {
        EXPECT_GE(x.pi_exp(), 0);
        EXPECT_LE(x.pi_exp(), static_cast<Int>(p) - 2);
      }
      // shifting by p-1 multiplies by -p
      EXPECT_EQ(x.shifted(static_cast<Int>(p) - 1), x * PiRational(p, -Rational(p), 0));
    }
  }
}
