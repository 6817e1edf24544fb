#include <immintrin.h>

#include <bit>
#include <stdexcept>

#include "gkz/kernels.hpp"

namespace gkz::kernels::avx2 {

namespace {

// Lane sums stay below 2^24 so float conversion and the reciprocal quotient
// are exact up to a +-1 correction.
constexpr std::uint32_t kMaxModulus = 4096;
constexpr std::int64_t kExactLimit = std::int64_t{1} << 24;

struct Reducer {
  __m256i p;
  __m256i pm1;
  __m256 inv_p;

  explicit Reducer(std::uint32_t modulus)
      : p(_mm256_set1_epi32(static_cast<int>(modulus))),
        pm1(_mm256_set1_epi32(static_cast<int>(modulus) - 1)),
        inv_p(_mm256_set1_ps(1.0f / static_cast<float>(modulus))) {}

  __m256i operator()(__m256i s) const {
    __m256 q = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(s), inv_p));
    __m256i r = _mm256_sub_epi32(s, _mm256_mullo_epi32(_mm256_cvttps_epi32(q), p));
    r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), r), p));
    r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, pm1), p));
    return r;
  }
};

// Terms that fit on top of a reduced accumulator (< p) while staying below 2^24.
std::size_t chunk_terms(std::uint32_t p) {
  std::int64_t sq = static_cast<std::int64_t>(p - 1) * (p - 1);
  if (sq == 0) return 1 << 20;
  std::int64_t k = (kExactLimit - p) / sq;
  return k < 1 ? 1 : static_cast<std::size_t>(k);
}

inline __m256i combine8(const std::uint32_t* columns, std::size_t length, std::span<const std::uint32_t> coeffs,
                        std::size_t i, const Reducer& red, std::size_t chunk) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t pending = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (pending == chunk) {
      acc = red(acc);
      pending = 0;
    }
    __m256i col = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(columns + j * length + i));
    acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(col, _mm256_set1_epi32(static_cast<int>(coeffs[j]))));
    ++pending;
  }
  return red(acc);
}

}  // namespace

bool compiled() { return true; }

void combine_mod(std::span<const std::uint32_t> columns, std::size_t length,
                 std::span<const std::uint32_t> coeffs, std::uint32_t p, std::span<std::uint32_t> out) {
  if (p < 2 || p >= kMaxModulus) {
    scalar::combine_mod(columns, length, coeffs, p, out);
    return;
  }
  if (columns.size() != coeffs.size() * length) throw std::invalid_argument("column block has wrong size");
  if (out.size() != length) throw std::invalid_argument("output has wrong size");
  const Reducer red(p);
  const std::size_t chunk = chunk_terms(p);
  const std::size_t body = length - length % 8;
  for (std::size_t i = 0; i < body; i += 8) {
    __m256i r = combine8(columns.data(), length, coeffs, i, red, chunk);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), r);
  }
  for (std::size_t i = body; i < length; ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) s += static_cast<std::uint64_t>(coeffs[j]) * columns[j * length + i];
    out[i] = static_cast<std::uint32_t>(s % p);
  }
}

std::uint64_t count_zero_combinations(std::span<const std::uint32_t> columns, std::size_t length,
                                      std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  if (p < 2 || p >= kMaxModulus) return scalar::count_zero_combinations(columns, length, coeffs, p);
  if (columns.size() != coeffs.size() * length) throw std::invalid_argument("column block has wrong size");
  const Reducer red(p);
  const std::size_t chunk = chunk_terms(p);
  const std::size_t body = length - length % 8;
  std::uint64_t zeros = 0;
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t i = 0; i < body; i += 8) {
    __m256i r = combine8(columns.data(), length, coeffs, i, red, chunk);
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(r, zero)));
    zeros += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(mask)));
  }
  for (std::size_t i = body; i < length; ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) s += static_cast<std::uint64_t>(coeffs[j]) * columns[j * length + i];
    zeros += s % p == 0;
  }
  return zeros;
}

}  // namespace gkz::kernels::avx2
