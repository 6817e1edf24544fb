#include "gkz/corpus.hpp"

#include "gkz/pweight.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace gkz::corpus {

namespace {

// Explicit reduction keeps the sequence identical across standard libraries.
Int draw(std::mt19937_64& rng, Int lo, Int hi) {
  return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<LatticeVector> random_generators(std::mt19937_64& rng, std::size_t n, std::size_t N, Int lo_affine) {
  while (true) {
    std::set<LatticeVector> gens;
    std::vector<LatticeVector> out;
    for (std::size_t j = 0; j < N; ++j) {
      LatticeVector g(n);
      for (std::size_t i = 0; i < n; ++i) g[i] = draw(rng, i + 1 == n ? lo_affine : -2, 2);
      out.push_back(g);
      gens.insert(g);
    }
    const bool nonzero = std::none_of(out.begin(), out.end(), [](const LatticeVector& g) {
      return std::all_of(g.begin(), g.end(), [](Int x) { return x == 0; });
    });
    if (nonzero && gens.size() == N) return out;
  }
}

}  // namespace

ASet cone() { return ASet({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}}); }

LatticeVector cone_beta(std::uint32_t p) {
  const Int h = (static_cast<Int>(p) - 1) / 2;
  return {h, h, 0};
}

std::vector<ASet> random_configurations(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ASet> out;
  while (out.size() < count) {
    const std::size_t n = static_cast<std::size_t>(draw(rng, 1, 3));
    const std::size_t N = static_cast<std::size_t>(draw(rng, 2, 4));
    ASet A(random_generators(rng, n, N, -2));
    // Only pointed configurations have finite fibers, which the basis checks need.
    if (A.pointed()) out.push_back(std::move(A));
  }
  return out;
}

std::vector<SolutionInstance> solution_instances() {
  std::vector<SolutionInstance> out;
  for (std::uint32_t p : {3u, 5u, 7u}) out.push_back({"cone p=" + std::to_string(p), cone(), cone_beta(p), p});
  const ASet K({{1}, {-1}});
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (Int b : {0, 1, 2}) out.push_back({"kloosterman p=" + std::to_string(p) + " beta=" + std::to_string(b), K, {b}, p});
  }
  std::mt19937_64 rng(kSeed + 1);
  const std::uint32_t primes[] = {3, 5, 7};
  std::size_t idx = 0;
  for (const ASet& A : random_configurations(8)) {
    const std::uint32_t p = primes[idx % 3];
    std::vector<Int> u(A.size());
    for (auto& x : u) x = draw(rng, 0, 2);
    out.push_back({"random#" + std::to_string(idx) + " p=" + std::to_string(p), A, A.combine(u), p});
    ++idx;
  }
  return out;
}

std::vector<InvariantInstance> toric_instances() {
  std::vector<InvariantInstance> out;
  const ASet K({{1}, {-1}});
  for (std::uint32_t p : {3u, 5u}) {
    for (unsigned a : {1u, 2u}) {
      const Int q = a == 1 ? p : static_cast<Int>(p) * p;
      for (Int e = 0; e < q - 1; ++e) {
        out.push_back({"kloosterman p=" + std::to_string(p) + " a=" + std::to_string(a) + " e=" + std::to_string(e), K,
                       {e}, p, a, 1});
      }
    }
  }
  for (std::uint32_t p : {3u, 5u}) {
    for (const LatticeVector& e : std::vector<LatticeVector>{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}}) {
      out.push_back({"cone p=" + std::to_string(p) + " e=" + to_string(e), cone(), e, p, 1, 3});
    }
  }
  out.push_back({"cone p=3 a=2 e=(1,1,0)", cone(), {1, 1, 0}, 3, 2, 3});

  std::mt19937_64 rng(kSeed + 2);
  std::size_t idx = 0;
  for (const ASet& A : random_configurations(10, kSeed + 3)) {
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7}[idx % 3];
    const unsigned a = (idx % 3 == 2 && p == 3) ? 2 : 1;
    const Int q = a == 1 ? p : static_cast<Int>(p) * p;
    LatticeVector e(A.dim());
    for (auto& x : e) x = draw(rng, 0, q - 2);
    out.push_back({"random#" + std::to_string(idx) + " p=" + std::to_string(p) + " a=" + std::to_string(a), A, e, p,
                   a, A.dim()});
    ++idx;
  }
  return out;
}

std::vector<InvariantInstance> affine_instances() {
  std::vector<InvariantInstance> out;
  for (const HypersurfaceSpec& h : hypersurfaces()) {
    if (!example3_witness(h)) continue;
    out.push_back({"augmented " + h.describe(), augmented_configuration(h), LatticeVector(h.n + 1, 0), h.p, 1, 0});
  }
  std::mt19937_64 rng(kSeed + 4);
  std::size_t made = 0;
  while (made < 8) {
    // n = 2 with one toric coordinate; the affine coordinate must be nonnegative and used.
    const std::size_t N = static_cast<std::size_t>(draw(rng, 2, 4));
    auto gens = random_generators(rng, 2, N, 0);
    if (std::none_of(gens.begin(), gens.end(), [](const LatticeVector& g) { return g[1] > 0; })) continue;
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7}[made % 3];
    LatticeVector e{draw(rng, 0, static_cast<Int>(p) - 2), 0};
    ASet A(gens);
    auto layers = enumerate_U_M_layers(A, e, p, 1, 1);
    if (std::all_of(layers.begin(), layers.end(), [](const auto& L) { return L.empty(); })) continue;
    out.push_back({"random affine#" + std::to_string(made) + " p=" + std::to_string(p), std::move(A), e, p, 1,
                   1});
    ++made;
  }
  return out;
}

std::vector<HypersurfaceSpec> hypersurfaces() {
  std::vector<HypersurfaceSpec> out;
  const std::vector<std::vector<std::vector<Int>>> families = {
      {{2, 0}, {0, 2}},                                // diagonal quadric
      {{3, 0}, {0, 3}},                                // diagonal cubic curve
      {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}},               // diagonal cubic surface
      {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}},    // Hesse pencil
      {{2, 0}, {1, 1}, {0, 2}},                        // general binary quadric
      {{2, 1}, {1, 2}},
  };
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (const auto& mons : families) {
      HypersurfaceSpec h;
      h.p = p;
      h.n = mons.front().size();
      h.monomials = mons;
      out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace gkz::corpus
