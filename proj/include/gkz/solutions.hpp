#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gkz/aset.hpp"
#include "gkz/gfpoly.hpp"
#include "gkz/lattice.hpp"

namespace gkz {

enum class BoxKind { Normalized, Classical };
enum class BoxBranch { PositiveSum, NegativeSum, Balanced };

const char* to_string(BoxKind k);
const char* to_string(BoxBranch b);

/// Box operator attached to a relation l = l+ - l-. The normalized kind keeps
/// only the dominant side when sum l_i != 0; the classical kind is always the
/// difference of both products.
struct BoxOperator {
  RelationVector l;
  BoxKind kind = BoxKind::Normalized;

  /// Checks that l is a relation on A.
  static BoxOperator make(const ASet& A, RelationVector l, BoxKind kind);

  ExponentVector plus() const;
  ExponentVector minus() const;
  BoxBranch branch() const;
};

/// Z_i = sum_j a_ji l_j d/dl_j - beta_i
struct EulerOperator {
  std::size_t i = 0;
  std::vector<Int> weights;  ///< a_ji for j = 1..N
  Int beta_i = 0;
};

std::vector<EulerOperator> euler_operators(const ASet& A, const LatticeVector& beta);

/// sum over U+_min(gamma) of l^u / (u_1! ... u_N!). Requires gamma good.
GfPoly build_F(const ASet& A, const LatticeVector& gamma, std::uint32_t p, Int cap);

/// Same sum over all of U+(gamma). Requires gamma very good.
GfPoly build_G(const ASet& A, const LatticeVector& gamma, std::uint32_t p, Int cap);

/// The n residuals Z_i f, each reduced mod p.
std::vector<GfPoly> euler_residual(const ASet& A, const LatticeVector& beta, const GfPoly& f);

GfPoly box_residual(const BoxOperator& op, const GfPoly& f);

/// Finite set of relations standing in for "all l in L": small combinations of
/// the kernel basis (1-norm <= norm_cap, default 3 x the largest basis norm) and all
/// differences u - v with u, v in U+_{p-1}(gamma). Sorted, zero excluded.
std::vector<BoxOperator> relation_test_set(const ASet& A, const LatticeVector& gamma, std::uint32_t p,
                                           std::optional<Int> norm_cap = std::nullopt);

struct BasisElement {
  LatticeVector gamma;
  GfPoly F;
  bool euler_ok = false;
  bool box_ok = false;
  /// Only meaningful when A is nonconfluent: normalized and classical residuals agree.
  std::optional<bool> classical_agrees;
  std::size_t relations_tested = 0;
};

struct VeryGoodElement {
  LatticeVector gamma;
  GfPoly G;
  bool euler_ok = false;
  bool classical_box_ok = false;
  std::size_t relations_tested = 0;
};

struct SolutionBasis {
  GoodnessCatalog catalog;
  std::vector<BasisElement> elements;
  std::vector<VeryGoodElement> very_good;
  bool disjoint_supports = true;

  bool all_checks_pass() const;
};

/// F_gamma for every gamma in sigma_A(beta), each checked against the Euler
/// operators and the relation test set; G_gamma likewise for tau_A(beta).
SolutionBasis solution_basis(const ASet& A, const LatticeVector& beta, std::uint32_t p, Int cap,
                             std::optional<Int> norm_cap = std::nullopt);

}  // namespace gkz
