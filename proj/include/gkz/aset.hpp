#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gkz/linear.hpp"
#include "gkz/types.hpp"

namespace gkz {

/// The generator set A = {a_1, ..., a_N} in Z^n, with two derived linear forms:
///
///  - a pointedness witness h with h.a_i >= 1 for every i. It exists exactly when
///    no nonzero nonnegative relation sum l_i a_i = 0 exists (Gordan), and it is
///    found by exact Fourier-Motzkin elimination, so `pointed()` is a decision;
///  - a nonconfluence form h with h.a_i = 1 for every i, when one exists.
class ASet {
 public:
  explicit ASet(std::vector<LatticeVector> generators);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const LatticeVector& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<LatticeVector>& generators() const noexcept { return gens_; }

  /// sum_i u_i a_i
  LatticeVector combine(std::span<const Int> u) const;

  bool pointed() const noexcept { return pointed_form_.has_value(); }
  const std::optional<linear::RationalVector>& pointedness() const noexcept { return pointed_form_; }
  /// Integer multiple of the pointedness witness (empty when not pointed).
  const std::vector<Int>& integral_pointed_form() const noexcept { return pointed_int_; }
  /// min_i of integral_pointed_form() . a_i (> 0 when pointed).
  Int min_pointed_value() const noexcept { return pointed_min_; }

  const std::optional<linear::RationalVector>& nonconfluent_form() const noexcept { return nonconfluent_; }

  /// Rank of the n x N matrix with columns a_i.
  std::size_t rank() const noexcept { return rank_; }

  bool operator==(const ASet& other) const { return gens_ == other.gens_; }

 private:
  std::size_t dim_;
  std::vector<LatticeVector> gens_;
  std::optional<linear::RationalVector> pointed_form_;
  std::vector<Int> pointed_int_;
  Int pointed_min_ = 0;
  std::optional<linear::RationalVector> nonconfluent_;
  std::size_t rank_ = 0;
};

}  // namespace gkz
