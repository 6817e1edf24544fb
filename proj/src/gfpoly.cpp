#include "gkz/gfpoly.hpp"

#include <algorithm>
#include <sstream>

#include "gkz/kernels.hpp"
#include "gkz/modp.hpp"

namespace gkz {

GfPoly::GfPoly(std::uint32_t p, std::size_t nvars) : p_(p), nvars_(nvars) {
  if (p < 2) throw InputError("polynomial modulus must be at least 2");
}

GfPoly GfPoly::constant(std::uint32_t p, std::size_t nvars, Int c) {
  GfPoly f(p, nvars);
  f.add_term(ExponentVector(nvars, 0), c);
  return f;
}

GfPoly GfPoly::monomial(std::uint32_t p, ExponentVector exps, Int c) {
  GfPoly f(p, exps.size());
  f.add_term(exps, c);
  return f;
}

void GfPoly::add_term(const ExponentVector& u, Int c) {
  if (u.size() != nvars_) throw InputError("exponent vector has wrong length");
  for (Int x : u) {
    if (x < 0) throw InputError("negative exponent in polynomial term");
  }
  std::uint32_t r = mod(c, p_);
  if (r == 0) return;
  auto it = terms_.find(u);
  if (it == terms_.end()) {
    terms_.emplace(u, r);
    return;
  }
  it->second = (it->second + r) % p_;
  if (it->second == 0) terms_.erase(it);
}

std::uint32_t GfPoly::coefficient(const ExponentVector& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? 0 : it->second;
}

void GfPoly::check_compatible(const GfPoly& rhs) const {
  if (p_ != rhs.p_) throw InputError("polynomials over different fields");
  if (nvars_ != rhs.nvars_) throw InputError("polynomials in different numbers of variables");
}

GfPoly& GfPoly::operator+=(const GfPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [u, c] : rhs.terms_) add_term(u, c);
  return *this;
}

GfPoly GfPoly::operator+(const GfPoly& rhs) const {
  GfPoly out = *this;
  out += rhs;
  return out;
}

GfPoly GfPoly::operator-() const { return scaled(-1); }

GfPoly GfPoly::operator-(const GfPoly& rhs) const {
  check_compatible(rhs);
  GfPoly out = *this;
  for (const auto& [u, c] : rhs.terms_) out.add_term(u, static_cast<Int>(p_ - c));
  return out;
}

GfPoly GfPoly::scaled(Int c) const {
  GfPoly out(p_, nvars_);
  std::uint32_t r = mod(c, p_);
  if (r == 0) return out;
  for (const auto& [u, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), u, mul_mod(a, r, p_));
  return out;
}

GfPoly GfPoly::operator*(const GfPoly& rhs) const {
  check_compatible(rhs);
  GfPoly out(p_, nvars_);
  ExponentVector w(nvars_);
  for (const auto& [u, a] : terms_) {
    for (const auto& [v, b] : rhs.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) w[i] = checked_add(u[i], v[i]);
      out.add_term(w, mul_mod(a, b, p_));
    }
  }
  return out;
}

std::uint32_t GfPoly::evaluate(std::span<const std::uint32_t> point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has wrong length");
  std::uint64_t s = 0;
  for (const auto& [u, c] : terms_) {
    std::uint32_t t = c;
    for (std::size_t i = 0; i < nvars_ && t != 0; ++i) {
      if (u[i] != 0) t = mul_mod(t, pow_mod(point[i] % p_, static_cast<std::uint64_t>(u[i]), p_), p_);
    }
    s = (s + t) % p_;
  }
  return static_cast<std::uint32_t>(s);
}

Int GfPoly::degree_in(std::size_t i) const {
  if (i >= nvars_) throw InputError("variable index out of range");
  Int d = -1;
  for (const auto& [u, c] : terms_) d = std::max(d, u[i]);
  return d;
}

std::string GfPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool constant = std::all_of(u.begin(), u.end(), [](Int x) { return x == 0; });
    bool need_star = false;
    if (c != 1 || constant) {
      os << c;
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (u[i] == 0) continue;
      if (need_star) os << '*';
      os << 'l' << (i + 1);
      if (u[i] != 1) os << '^' << u[i];
      need_star = true;
    }
  }
  return os.str();
}

GfPoly derivative_power(const GfPoly& f, std::size_t i, Int k) {
  if (i >= f.nvars()) throw InputError("variable index out of range");
  if (k < 0) throw InputError("derivative order must be nonnegative");
  const std::uint32_t p = f.modulus();
  GfPoly out(p, f.nvars());
  for (const auto& [u, c] : f.terms()) {
    if (u[i] < k) continue;
    std::uint32_t ff = c;
    for (Int j = 0; j < k && ff != 0; ++j) ff = mul_mod(ff, mod(u[i] - j, p), p);
    if (ff == 0) continue;
    ExponentVector v = u;
    v[i] -= k;
    out.add_term(v, ff);
  }
  return out;
}

GfPoly frobenius_twist(const GfPoly& f, unsigned k) {
  const Int scale = checked_pow(f.modulus(), k);
  GfPoly out(f.modulus(), f.nvars());
  for (const auto& [u, c] : f.terms()) {
    ExponentVector v = u;
    for (Int& x : v) x = checked_mul(x, scale);
    out.add_term(v, c);
  }
  return out;
}

GfPoly pow(const GfPoly& f, std::uint64_t e) {
  GfPoly result = GfPoly::constant(f.modulus(), f.nvars(), 1);
  GfPoly base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::vector<std::uint32_t> grid_point(std::uint64_t index, std::uint32_t p, std::size_t nvars) {
  std::vector<std::uint32_t> x(nvars);
  for (std::size_t i = nvars; i-- > 0;) {
    x[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return x;
}

std::vector<std::uint32_t> evaluate_on_grid(const GfPoly& f) {
  const std::uint32_t p = f.modulus();
  const std::size_t nv = f.nvars();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < nv; ++i) total = static_cast<std::uint64_t>(checked_mul(static_cast<Int>(total), p));
  std::vector<std::uint32_t> values(total, 0);
  if (f.is_zero()) return values;

  std::vector<std::uint32_t> coeffs;
  coeffs.reserve(f.size());
  for (const auto& [u, c] : f.terms()) coeffs.push_back(c);

  constexpr std::uint64_t kBlock = 4096;
  std::vector<std::uint32_t> columns;
  std::vector<std::uint32_t> out;
  for (std::uint64_t start = 0; start < total; start += kBlock) {
    const std::size_t len = static_cast<std::size_t>(std::min(kBlock, total - start));
    columns.assign(coeffs.size() * len, 0);
    for (std::size_t off = 0; off < len; ++off) {
      std::vector<std::uint32_t> x = grid_point(start + off, p, nv);
      std::size_t t = 0;
      for (const auto& [u, c] : f.terms()) {
        std::uint32_t m = 1;
        for (std::size_t i = 0; i < nv && m != 0; ++i) {
          if (u[i] != 0) m = mul_mod(m, pow_mod(x[i], static_cast<std::uint64_t>(u[i]), p), p);
        }
        columns[t * len + off] = m;
        ++t;
      }
    }
    out.assign(len, 0);
    kernels::combine_mod(columns, len, coeffs, p, out);
    std::copy(out.begin(), out.end(), values.begin() + static_cast<std::ptrdiff_t>(start));
  }
  return values;
}

}  // namespace gkz
