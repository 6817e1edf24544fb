#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkz/aset.hpp"
#include "gkz/gfpoly.hpp"
#include "gkz/lattice.hpp"

namespace gkz {

/// value * pi^pi_exp with pi^(p-1) = -p, kept with 0 <= pi_exp <= p-2.
class PiRational {
 public:
  PiRational(std::uint32_t p, Rational value = 0, Int pi_exp = 0);

  std::uint32_t prime() const noexcept { return p_; }
  const Rational& value() const noexcept { return value_; }
  Int pi_exp() const noexcept { return pi_exp_; }
  bool is_zero() const { return value_ == 0; }

  PiRational operator*(const PiRational& rhs) const;
  /// Defined only when both sides share pi_exp (or one is zero).
  PiRational operator+(const PiRational& rhs) const;
  /// Multiply by pi^k.
  PiRational shifted(Int k) const;

  bool operator==(const PiRational& rhs) const {
    return p_ == rhs.p_ && value_ == rhs.value_ && pi_exp_ == rhs.pi_exp_;
  }

  /// Nonnegative valuation.
  bool p_integral() const;

  /// Residue modulo pi (nullopt when not p-integral).
  std::optional<std::uint32_t> mod_pi() const;

  std::string to_string() const;

 private:
  void normalize();

  std::uint32_t p_;
  Rational value_;
  Int pi_exp_;
};

/// ord_p of a nonzero rational.
int rational_valuation(const Rational& r, std::uint32_t p);

enum class MinimalityStatus { Verified, Refuted, UnknownUpToCap };
const char* to_string(MinimalityStatus s);

struct SupportProfile {
  std::vector<Rational> v0;          ///< u0 / (1 - p)
  std::vector<std::size_t> nsupp;    ///< indices where v0 is a negative integer
  MinimalityStatus minimal = MinimalityStatus::UnknownUpToCap;
  std::optional<RelationVector> refuting_relation;
};

/// Indices i with x_i a negative integer.
std::vector<std::size_t> negative_support(const std::vector<Rational>& x);

/// Decides whether no relation l shrinks the negative support of u0/(1-p).
/// A bounded scan over small combinations of the basis (1-norm <= cap) looks for an
/// explicit witness first; the question is then settled exactly by linear feasibility.
SupportProfile support_profile(const ExponentVector& u0, std::uint32_t p, const RelationLattice& L, Int cap);

/// [v0]_{l-} / [v0 + l]_{l+}. Throws InputError when the denominator vanishes.
Rational series_coefficient(const std::vector<Rational>& v0, const RelationVector& l);

struct TruncatedSeries {
  SupportProfile profile;
  std::vector<std::pair<ExponentVector, PiRational>> terms;  ///< sorted by exponent
};

/// Terms of the truncation with exponents u0 + l in U+_{p-1}(gamma).
TruncatedSeries truncated_G(const ExponentVector& u0, const LatticeVector& gamma, const ASet& A, std::uint32_t p,
                            Int cap);

struct SeriesReport {
  TruncatedSeries series;
  Int weight = 0;  ///< w(gamma)
  std::vector<std::pair<ExponentVector, PiRational>> scaled;  ///< pi^{-w} G
  bool integral = false;
  bool congruent = false;
  GfPoly reduced;   ///< pi^{-w} G mod pi
  GfPoly expected;  ///< (prod u0_i!) F_gamma
  std::vector<std::string> failures;

  SeriesReport(std::uint32_t p, std::size_t nvars) : reduced(p, nvars), expected(p, nvars) {}
  bool passed() const { return integral && congruent && failures.empty(); }
};

/// p-integrality of pi^{-w(gamma)} G and its congruence to (prod u0_i!) F_gamma mod pi.
SeriesReport verify_truncation_congruence(const ExponentVector& u0, const LatticeVector& gamma, const ASet& A, std::uint32_t p,
                             Int cap);

}  // namespace gkz
