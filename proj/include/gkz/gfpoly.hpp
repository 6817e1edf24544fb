#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gkz/types.hpp"

namespace gkz {

/// Sparse polynomial over F_p in variables l1..lN. Terms are kept in a map
/// ordered lexicographically by exponent vector; zero coefficients are never stored.
class GfPoly {
 public:
  using Terms = std::map<ExponentVector, std::uint32_t>;

  GfPoly(std::uint32_t p, std::size_t nvars);

  static GfPoly constant(std::uint32_t p, std::size_t nvars, Int c);
  static GfPoly monomial(std::uint32_t p, ExponentVector exps, Int c = 1);

  std::uint32_t modulus() const noexcept { return p_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c * l^u (c taken mod p).
  void add_term(const ExponentVector& u, Int c);
  std::uint32_t coefficient(const ExponentVector& u) const;

  GfPoly operator+(const GfPoly& rhs) const;
  GfPoly operator-(const GfPoly& rhs) const;
  GfPoly operator*(const GfPoly& rhs) const;
  GfPoly operator-() const;
  GfPoly scaled(Int c) const;
  GfPoly& operator+=(const GfPoly& rhs);

  bool operator==(const GfPoly& rhs) const {
    return p_ == rhs.p_ && nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
  }

  std::uint32_t evaluate(std::span<const std::uint32_t> point) const;

  /// Largest exponent of variable i, or -1 for the zero polynomial.
  Int degree_in(std::size_t i) const;

  /// e.g. `4*l1^3 + 2*l1^5*l2^2`; `0` for the zero polynomial.
  std::string to_string() const;

 private:
  void check_compatible(const GfPoly& rhs) const;

  std::uint32_t p_;
  std::size_t nvars_;
  Terms terms_;
};

/// (d/dl_i)^k f, variable index 0-based. Falling factorials are reduced mod p.
GfPoly derivative_power(const GfPoly& f, std::size_t i, Int k);

/// l_i -> l_i^(p^k) for every variable.
GfPoly frobenius_twist(const GfPoly& f, unsigned k);

GfPoly pow(const GfPoly& f, std::uint64_t e);

/// Values of f at every point of F_p^N. Point index is sum_i x_i p^(N-1-i),
/// so the first variable varies slowest.
std::vector<std::uint32_t> evaluate_on_grid(const GfPoly& f);

/// Point of F_p^N with the given grid index (inverse of the order above).
std::vector<std::uint32_t> grid_point(std::uint64_t index, std::uint32_t p, std::size_t nvars);

}  // namespace gkz
