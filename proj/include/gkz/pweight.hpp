#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gkz/aset.hpp"
#include "gkz/lattice.hpp"

namespace gkz {

/// Base-p expansion u_i = sum_k u_i^(k) p^k of a point of {0..q-1}^N together with
/// the digit images gamma_k = sum_i u_i^(k) a_i and the p-weight.
struct DigitDecomposition {
  ExponentVector u;
  std::vector<ExponentVector> digits;  ///< digits[k][i] = u_i^(k)
  std::vector<LatticeVector> gammas;   ///< gamma_0 .. gamma_{a-1}
  Int pweight = 0;
  std::vector<Int> digit_sums;  ///< S(u_i)

  /// sum_i u_i^(k)
  Int level_weight(std::size_t k) const;
};

DigitDecomposition digits(const ASet& A, const ExponentVector& u, std::uint32_t p, unsigned a);

/// Base-p digit sum of a nonnegative integer.
Int digit_sum(Int x, std::uint32_t p);

/// The sets M handled by the digit machinery: M = e + (q-1)Z^n, or its layer M_l of
/// points with exactly l nonzero coordinates among positions m..n-1 (0-based).
struct MSpec {
  enum class Kind { Toric, AffineLayer };

  Kind kind = Kind::Toric;
  LatticeVector e;
  std::uint32_t p = 2;
  unsigned a = 1;
  Int q = 2;
  std::size_t m = 0;
  std::size_t l = 0;

  static MSpec toric(LatticeVector e, std::uint32_t p, unsigned a);
  static MSpec affine_layer(LatticeVector e, std::uint32_t p, unsigned a, std::size_t m, std::size_t l);

  bool contains(const LatticeVector& x) const;
};

/// Number of nonzero coordinates of x at positions >= m.
std::size_t affine_support(const LatticeVector& x, std::size_t m);

/// U_M = { u in {0..q-1}^N : sum u_i a_i in M }, sorted.
std::vector<ExponentVector> enumerate_U_M(const ASet& A, const MSpec& spec);

/// U_{M_l} for l = 0..n-m in one pass over the residue classes of e + (q-1)Z^n.
std::vector<std::vector<ExponentVector>> enumerate_U_M_layers(const ASet& A, const LatticeVector& e, std::uint32_t p,
                                                              unsigned a, std::size_t m);

struct PWeightMinimum {
  Int wp = 0;
  std::vector<ExponentVector> minimizers;  ///< U_{M,min}, sorted
};

/// Throws InputError on an empty set.
PWeightMinimum wp_min(const std::vector<ExponentVector>& U_M, std::uint32_t p, unsigned a);

struct GammaSequence {
  std::vector<LatticeVector> gammas;
  std::vector<Int> weights;                           ///< w(gamma_k)
  std::vector<std::vector<ExponentVector>> minimals;  ///< U+_min(gamma_k)
  std::vector<ExponentVector> members;                ///< U(gamma_0..gamma_{a-1}), sorted
};

/// Groups U_{M,min} by digit images and checks each class: every gamma_k is good,
/// every digit vector is minimal, the class equals the full assembly of minimal
/// digit vectors, sum p^k gamma_k lies in M and sum w(gamma_k) = w_p(M).
/// Throws ConsistencyError when any of these fail. Ordered by gammas.
std::vector<GammaSequence> gamma_sequences(const ASet& A, const MSpec& spec, const PWeightMinimum& minimum, Int cap);

/// Result of comparing w_p(u) with sum_k w(gamma_k) for one u.
struct WeightEquality {
  Int pweight = 0;
  Int gamma_weight_sum = 0;
  bool all_digits_minimal = false;

  /// Equality holds exactly when every digit vector is minimal.
  bool consistent() const { return (pweight == gamma_weight_sum) == all_digits_minimal && pweight >= gamma_weight_sum; }
};

WeightEquality weight_equality(const ASet& A, const DigitDecomposition& d, Int cap);

}  // namespace gkz
