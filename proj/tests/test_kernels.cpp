#include <gtest/gtest.h>

#include <random>

#include "gkz/kernels.hpp"

using namespace gkz::kernels;

namespace {

struct Case {
  std::vector<std::uint32_t> columns, coeffs;
  std::size_t length;
  std::uint32_t p;
};

Case random_case(std::mt19937_64& rng, std::uint32_t p, std::size_t ncols, std::size_t length) {
  Case c{std::vector<std::uint32_t>(ncols * length), std::vector<std::uint32_t>(ncols), length, p};
  for (auto& x : c.columns) x = static_cast<std::uint32_t>(rng() % p);
  for (auto& x : c.coeffs) x = static_cast<std::uint32_t>(rng() % p);
  return c;
}

std::vector<std::uint32_t> reference(const Case& c) {
  std::vector<std::uint32_t> out(c.length);
  for (std::size_t i = 0; i < c.length; ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < c.coeffs.size(); ++j) s += std::uint64_t{c.coeffs[j]} * c.columns[j * c.length + i];
    out[i] = static_cast<std::uint32_t>(s % c.p);
  }
  return out;
}

}  // namespace

TEST(Kernels, ScalarMatchesReference) {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 7u, 101u, 4093u, 65521u, 2147483647u}) {
    Case c = random_case(rng, p, 5, 37);
    std::vector<std::uint32_t> out(c.length);
    scalar::combine_mod(c.columns, c.length, c.coeffs, p, out);
    EXPECT_EQ(out, reference(c)) << p;
  }
}

TEST(Kernels, SimdMatchesScalarIncludingTails) {
  if (!avx2::compiled() || detected_isa() != Isa::Avx2) GTEST_SKIP() << "AVX2 unavailable";
  std::mt19937_64 rng(2);
  // primes below and above the float-reciprocal threshold, with many lengths to exercise tails
  for (std::uint32_t p : {2u, 3u, 5u, 13u, 251u, 4091u, 4093u, 4099u, 65521u}) {
    for (std::size_t ncols : {1u, 2u, 4u, 9u, 40u}) {
      for (std::size_t length : {0u, 1u, 7u, 8u, 9u, 15u, 16u, 17u, 63u, 1000u}) {
        Case c = random_case(rng, p, ncols, length);
        std::vector<std::uint32_t> a(length), b(length);
        scalar::combine_mod(c.columns, length, c.coeffs, p, a);
        avx2::combine_mod(c.columns, length, c.coeffs, p, b);
        ASSERT_EQ(a, b) << "p=" << p << " cols=" << ncols << " len=" << length;
        EXPECT_EQ(scalar::count_zero_combinations(c.columns, length, c.coeffs, p),
                  avx2::count_zero_combinations(c.columns, length, c.coeffs, p));
      }
    }
  }
}

TEST(Kernels, SimdExtremeResidues) {
  if (!avx2::compiled() || detected_isa() != Isa::Avx2) GTEST_SKIP() << "AVX2 unavailable";
  for (std::uint32_t p : {3u, 4093u}) {
    const std::size_t ncols = 300, length = 33;
    std::vector<std::uint32_t> cols(ncols * length, p - 1), coeffs(ncols, p - 1);
    std::vector<std::uint32_t> a(length), b(length);
    scalar::combine_mod(cols, length, coeffs, p, a);
    avx2::combine_mod(cols, length, coeffs, p, b);
    EXPECT_EQ(a, b) << p;
  }
}

TEST(Kernels, OverrideSelectsImplementation) {
  set_isa_override(Isa::Scalar);
  EXPECT_EQ(active_isa(), Isa::Scalar);
  set_isa_override(std::nullopt);
  EXPECT_EQ(active_isa(), detected_isa());
}

TEST(Kernels, CountZeros) {
  // columns x and y over F_3, all 9 points; x + y == 0 has 3 solutions
  std::vector<std::uint32_t> cols;
  for (std::uint32_t x = 0; x < 3; ++x)
    for (std::uint32_t y = 0; y < 3; ++y) cols.push_back(x);
  for (std::uint32_t x = 0; x < 3; ++x)
    for (std::uint32_t y = 0; y < 3; ++y) cols.push_back(y);
  std::vector<std::uint32_t> coeffs{1, 1};
  EXPECT_EQ(count_zero_combinations(cols, 9, coeffs, 3), 3u);
}
