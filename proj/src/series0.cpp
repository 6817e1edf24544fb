#include "gkz/series0.hpp"

#include <algorithm>
#include <sstream>

#include "gkz/linear.hpp"
#include "gkz/modp.hpp"

namespace gkz {

namespace {

Rational power_of(Int base, Int k) {
  Rational r = 1;
  Rational b = base;
  if (k < 0) {
    b = 1 / b;
    k = -k;
  }
  for (Int i = 0; i < k; ++i) r *= b;
  return r;
}

}  // namespace

PiRational::PiRational(std::uint32_t p, Rational value, Int pi_exp) : p_(p), value_(std::move(value)), pi_exp_(pi_exp) {
  if (!is_prime(p)) throw InputError("p must be prime");
  normalize();
}

void PiRational::normalize() {
  if (value_ == 0) {
    pi_exp_ = 0;
    return;
  }
  const Int period = static_cast<Int>(p_) - 1;
  Int k = pi_exp_ / period;
  if (pi_exp_ % period < 0) --k;
  pi_exp_ -= k * period;
  value_ *= power_of(-static_cast<Int>(p_), k);
}

PiRational PiRational::operator*(const PiRational& rhs) const {
  if (p_ != rhs.p_) throw InputError("pi-rationals for different primes");
  return PiRational(p_, value_ * rhs.value_, pi_exp_ + rhs.pi_exp_);
}

PiRational PiRational::operator+(const PiRational& rhs) const {
  if (p_ != rhs.p_) throw InputError("pi-rationals for different primes");
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  if (pi_exp_ != rhs.pi_exp_) throw InputError("sum of pi-rationals with different pi exponents");
  return PiRational(p_, value_ + rhs.value_, pi_exp_);
}

PiRational PiRational::shifted(Int k) const { return PiRational(p_, value_, pi_exp_ + k); }

int rational_valuation(const Rational& r, std::uint32_t p) {
  if (r == 0) throw InputError("valuation of zero");
  return valuation(boost::multiprecision::numerator(r), p) - valuation(boost::multiprecision::denominator(r), p);
}

bool PiRational::p_integral() const { return is_zero() || rational_valuation(value_, p_) >= 0; }

std::optional<std::uint32_t> PiRational::mod_pi() const {
  if (is_zero()) return 0u;
  int v = rational_valuation(value_, p_);
  if (v < 0) return std::nullopt;
  if (v > 0 || pi_exp_ > 0) return 0u;
  return rational_mod(value_, p_);
}

std::string PiRational::to_string() const {
  std::ostringstream os;
  os << value_;
  if (pi_exp_ != 0) os << "*pi^" << pi_exp_;
  return os.str();
}

const char* to_string(MinimalityStatus s) {
  switch (s) {
    case MinimalityStatus::Verified:
      return "verified";
    case MinimalityStatus::Refuted:
      return "refuted";
    case MinimalityStatus::UnknownUpToCap:
      return "unknown-up-to-cap";
  }
  return "?";
}

std::vector<std::size_t> negative_support(const std::vector<Rational>& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 && boost::multiprecision::denominator(x[i]) == 1) out.push_back(i);
  }
  return out;
}

namespace {

bool shrinks(const std::vector<Rational>& v0, const std::vector<std::size_t>& base, const RelationVector& l) {
  std::vector<Rational> shifted = v0;
  for (std::size_t i = 0; i < l.size(); ++i) shifted[i] += l[i];
  auto s = negative_support(shifted);
  return s.size() < base.size() && std::includes(base.begin(), base.end(), s.begin(), s.end());
}

}  // namespace

SupportProfile support_profile(const ExponentVector& u0, std::uint32_t p, const RelationLattice& L, Int cap) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (u0.size() != L.num_generators) throw InputError("exponent vector length differs from the lattice");
  SupportProfile prof;
  const Rational denom = Rational(1) - Rational(p);
  for (Int x : u0) {
    if (x < 0 || x > static_cast<Int>(p) - 1) throw InputError("entries of u0 must lie in 0..p-1");
    prof.v0.push_back(Rational(x) / denom);
  }
  prof.nsupp = negative_support(prof.v0);
  if (prof.nsupp.empty() || L.basis.empty()) {
    prof.minimal = MinimalityStatus::Verified;
    return prof;
  }

  for (const auto& l : L.combinations(3, cap)) {
    if (shrinks(prof.v0, prof.nsupp, l)) {
      prof.minimal = MinimalityStatus::Refuted;
      prof.refuting_relation = l;
      return prof;
    }
  }

  // l = sum_k c_k b_k shrinks the support exactly when l_i >= 0 wherever u0_i = 0 and
  // l_i >= 1 at some index of the support; L is closed under positive scaling, so
  // rational feasibility decides it.
  const std::size_t r = L.basis.size(), N = u0.size();
  auto row = [&](std::size_t i) {
    linear::RationalVector coeffs(r);
    for (std::size_t k = 0; k < r; ++k) coeffs[k] = L.basis[k][i];
    return coeffs;
  };
  for (std::size_t target : prof.nsupp) {
    std::vector<linear::Inequality> system;
    for (std::size_t i = 0; i < N; ++i) {
      if (u0[i] == 0) system.push_back({row(i), 0});
    }
    system.push_back({row(target), 1});
    auto c = linear::solve_inequalities(system, r);
    if (!c) continue;
    auto ci = linear::clear_denominators(*c);
    RelationVector l(N, 0);
    for (std::size_t k = 0; k < r; ++k) {
      Int ck = static_cast<Int>(ci[k]);
      for (std::size_t i = 0; i < N; ++i) l[i] = checked_add(l[i], checked_mul(ck, L.basis[k][i]));
    }
    if (!shrinks(prof.v0, prof.nsupp, l)) throw ConsistencyError("feasible relation does not shrink the support");
    prof.minimal = MinimalityStatus::Refuted;
    prof.refuting_relation = l;
    return prof;
  }
  prof.minimal = MinimalityStatus::Verified;
  return prof;
}

Rational series_coefficient(const std::vector<Rational>& v0, const RelationVector& l) {
  if (v0.size() != l.size()) throw InputError("relation length differs from v0");
  Rational num = 1, den = 1;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (Int j = 1; j <= -l[i]; ++j) num *= v0[i] - j + 1;
    for (Int j = 1; j <= l[i]; ++j) den *= v0[i] + j;
  }
  if (den == 0) throw InputError("vanishing denominator for relation " + to_string(l));
  return num / den;
}

TruncatedSeries truncated_G(const ExponentVector& u0, const LatticeVector& gamma, const ASet& A, std::uint32_t p,
                            Int cap) {
  if (A.combine(u0) != gamma) throw InputError("gamma differs from sum u0_i a_i");
  TruncatedSeries out;
  out.profile = support_profile(u0, p, relation_kernel_basis(A), cap);
  for (const auto& w : enumerate_box(A, gamma, static_cast<Int>(p) - 1)) {
    RelationVector l(w.size());
    std::vector<Rational> shifted = out.profile.v0;
    Int degree = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      l[i] = w[i] - u0[i];
      shifted[i] += l[i];
      degree += w[i];
    }
    if (negative_support(shifted) != out.profile.nsupp) continue;
    out.terms.emplace_back(w, PiRational(p, series_coefficient(out.profile.v0, l), degree));
  }
  return out;
}

SeriesReport verify_truncation_congruence(const ExponentVector& u0, const LatticeVector& gamma, const ASet& A,
                                          std::uint32_t p, Int cap) {
  SeriesReport rep(p, A.size());
  Goodness g = classify_goodness(A, gamma, p, cap);
  if (!g.good) throw InputError("gamma is not good: " + to_string(gamma));
  if (!std::binary_search(g.report.minimals.begin(), g.report.minimals.end(), u0)) {
    throw InputError("u0 is not a minimal representation of gamma");
  }
  rep.weight = g.report.weight;
  rep.series = truncated_G(u0, gamma, A, p, cap);
  if (rep.series.profile.minimal != MinimalityStatus::Verified) {
    rep.failures.push_back(std::string("negative support not minimal: ") + to_string(rep.series.profile.minimal));
  }

  FactorialTable table(p);
  std::uint32_t scale = 1;
  for (Int x : u0) scale = mul_mod(scale, table.fact(x), p);
  for (const auto& u : g.report.minimals) {
    std::uint32_t c = scale;
    for (Int x : u) c = mul_mod(c, table.inv_fact(x), p);
    rep.expected.add_term(u, c);
  }

  rep.integral = true;
  for (const auto& [w, coeff] : rep.series.terms) {
    PiRational s = coeff.shifted(-rep.weight);
    rep.scaled.emplace_back(w, s);
    auto residue = s.mod_pi();
    if (!residue) {
      rep.integral = false;
      rep.failures.push_back("coefficient of " + to_string(w) + " is not p-integral: " + s.to_string());
      continue;
    }
    rep.reduced.add_term(w, *residue);
  }
  rep.congruent = rep.integral && rep.reduced == rep.expected;
  if (rep.integral && !rep.congruent) {
    rep.failures.push_back("reduction " + rep.reduced.to_string() + " differs from " + rep.expected.to_string());
  }
  return rep;
}

}  // namespace gkz
