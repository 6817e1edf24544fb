#include "gkz/aset.hpp"

#include <cstdlib>

#include "gkz/modp.hpp"

namespace gkz {

namespace {
constexpr Int kMaxEntry = Int{1} << 24;
}

ASet::ASet(std::vector<LatticeVector> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw InputError("A must contain at least one vector");
  dim_ = gens_.front().size();
  if (dim_ == 0) throw InputError("A must live in Z^n with n >= 1");
  for (const auto& a : gens_) {
    if (a.size() != dim_) throw InputError("generators of A have different lengths");
    for (Int x : a) {
      if (std::llabs(x) > kMaxEntry) throw InputError("generator entry too large");
    }
  }

  std::vector<linear::Inequality> system;
  std::vector<linear::RationalVector> rows;
  for (const auto& a : gens_) {
    linear::RationalVector r;
    for (Int x : a) r.emplace_back(x);
    system.push_back({r, Rational(1)});
    rows.push_back(std::move(r));
  }
  pointed_form_ = linear::solve_inequalities(system, dim_);
  if (pointed_form_) {
    auto ints = linear::clear_denominators(*pointed_form_);
    for (const auto& x : ints) pointed_int_.push_back(static_cast<Int>(x));
    pointed_min_ = -1;
    for (const auto& a : gens_) {
      Int v = 0;
      for (std::size_t j = 0; j < dim_; ++j) v = checked_add(v, checked_mul(pointed_int_[j], a[j]));
      if (v <= 0) throw ConsistencyError("pointedness witness is not positive on A");
      if (pointed_min_ < 0 || v < pointed_min_) pointed_min_ = v;
    }
  }
  nonconfluent_ = linear::solve_equations(rows, linear::RationalVector(gens_.size(), Rational(1)), dim_);

  std::vector<std::vector<Int>> mat(dim_, std::vector<Int>(gens_.size()));
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = 0; j < dim_; ++j) mat[j][i] = gens_[i][j];
  }
  rank_ = linear::rank(mat, gens_.size());
}

LatticeVector ASet::combine(std::span<const Int> u) const {
  if (u.size() != gens_.size()) throw InputError("exponent vector length differs from |A|");
  LatticeVector out(dim_, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) out[j] = checked_add(out[j], checked_mul(u[i], gens_[i][j]));
  }
  return out;
}

}  // namespace gkz
