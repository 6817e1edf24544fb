#include <stdexcept>

#include "gkz/kernels.hpp"

namespace gkz::kernels::scalar {

namespace {

void check(std::span<const std::uint32_t> columns, std::size_t length, std::span<const std::uint32_t> coeffs,
           std::uint32_t p) {
  if (p == 0) throw std::invalid_argument("modulus must be positive");
  if (columns.size() != coeffs.size() * length) throw std::invalid_argument("column block has wrong size");
}

inline std::uint32_t combine_at(std::span<const std::uint32_t> columns, std::size_t length,
                                std::span<const std::uint32_t> coeffs, std::uint32_t p, std::size_t i) {
  std::uint64_t s = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    s += static_cast<std::uint64_t>(coeffs[j]) * columns[j * length + i];
    if (p >= (1u << 16)) s %= p;
  }
  return static_cast<std::uint32_t>(s % p);
}

}  // namespace

void combine_mod(std::span<const std::uint32_t> columns, std::size_t length,
                 std::span<const std::uint32_t> coeffs, std::uint32_t p, std::span<std::uint32_t> out) {
  check(columns, length, coeffs, p);
  if (out.size() != length) throw std::invalid_argument("output has wrong size");
  for (std::size_t i = 0; i < length; ++i) out[i] = combine_at(columns, length, coeffs, p, i);
}

std::uint64_t count_zero_combinations(std::span<const std::uint32_t> columns, std::size_t length,
                                      std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  check(columns, length, coeffs, p);
  std::uint64_t zeros = 0;
  for (std::size_t i = 0; i < length; ++i) zeros += combine_at(columns, length, coeffs, p, i) == 0;
  return zeros;
}

}  // namespace gkz::kernels::scalar
