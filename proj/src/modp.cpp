#include "gkz/modp.hpp"

#include <sstream>

namespace gkz {

std::string to_string(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  std::uint64_t b = base % p;
  while (exp) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw InputError("inverse of zero residue");
  return pow_mod(a, p - 2, p);
}

std::uint32_t rational_mod(const Rational& r, std::uint32_t p) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt dm = den % p;
  if (dm == 0) throw InputError("rational is not p-integral");
  BigInt nm = num % p;
  if (nm < 0) nm += p;
  if (dm < 0) dm += p;
  return mul_mod(static_cast<std::uint32_t>(nm), inv_mod(static_cast<std::uint32_t>(dm), p), p);
}

int valuation(const BigInt& x, std::uint32_t p) {
  if (x == 0) throw InputError("valuation of zero");
  int v = 0;
  BigInt y = x;
  while (y % p == 0) {
    y /= p;
    ++v;
  }
  return v;
}

FactorialTable::FactorialTable(std::uint32_t p) : p_(p), fact_(p), inv_fact_(p) {
  fact_[0] = 1 % p;
  for (std::uint32_t k = 1; k < p; ++k) fact_[k] = mul_mod(fact_[k - 1], k, p);
  for (std::uint32_t k = 0; k < p; ++k) inv_fact_[k] = inv_mod(fact_[k], p);
}

std::uint32_t FactorialTable::fact(Int k) const {
  if (k < 0 || k >= static_cast<Int>(p_)) throw InputError("factorial argument outside 0..p-1");
  return fact_[static_cast<std::size_t>(k)];
}

std::uint32_t FactorialTable::inv_fact(Int k) const {
  if (k < 0 || k >= static_cast<Int>(p_)) throw InputError("factorial argument outside 0..p-1");
  return inv_fact_[static_cast<std::size_t>(k)];
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

Int checked_pow(Int base, unsigned k) {
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace gkz
