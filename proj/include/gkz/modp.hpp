#pragma once

#include <cstdint>
#include <vector>

#include "gkz/types.hpp"

namespace gkz {

bool is_prime(std::uint64_t n);

/// Least nonnegative residue of x modulo m (m > 0).
inline std::uint32_t mod(Int x, std::uint32_t m) {
  Int r = x % static_cast<Int>(m);
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

/// Floor-mod for general positive moduli.
inline Int floor_mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p);

/// Inverse of a nonzero residue modulo a prime.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// Residue of a rational number with p-integral denominator.
std::uint32_t rational_mod(const Rational& r, std::uint32_t p);

/// p-adic valuation of a nonzero integer.
int valuation(const BigInt& x, std::uint32_t p);

/// 0!..(p-1)! and their inverses modulo p.
class FactorialTable {
 public:
  explicit FactorialTable(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t fact(Int k) const;
  std::uint32_t inv_fact(Int k) const;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> fact_;
  std::vector<std::uint32_t> inv_fact_;
};

/// Integer power p^k with overflow check.
Int checked_pow(Int base, unsigned k);
Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);

}  // namespace gkz
