#pragma once

// Brute-force checks over F_p that do not go through the lattice machinery.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkz/aset.hpp"
#include "gkz/gfpoly.hpp"
#include "gkz/hasse.hpp"

namespace gkz {

struct OracleReport {
  std::string instance;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  bool skipped = false;
  std::string note;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty() && passed == checked; }
  void record(bool good, const std::string& what);
};

/// f = sum_j lambda_j x^{a_j} with a_j in N^n of common degree d > 0.
struct HypersurfaceSpec {
  std::uint32_t p = 3;
  std::size_t n = 0;
  std::vector<std::vector<Int>> monomials;
  std::vector<std::uint32_t> lambda;

  void validate() const;
  std::string describe() const;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

/// Number of worker threads used by the oracles (0 or 1 means serial).
void set_oracle_threads(unsigned threads);
unsigned oracle_threads();

/// Zero counts of f_lambda on F_p^n for many lambda, sharing the monomial tables.
class PointCounter {
 public:
  PointCounter(std::uint32_t p, std::size_t n, std::vector<std::vector<Int>> monomials,
               std::uint64_t budget = kDefaultOracleBudget);

  std::uint64_t count(const std::vector<std::uint32_t>& lambda) const;
  std::uint64_t points() const noexcept { return points_; }

 private:
  std::uint32_t p_;
  std::size_t nmono_;
  std::uint64_t points_;
  std::vector<std::uint32_t> columns_;
};

std::uint64_t count_affine_zeros(const HypersurfaceSpec& h, std::uint64_t budget = kDefaultOracleBudget);

/// Some u in {0..p-1}^N with sum u_i = p-1 and sum u_i (a_i, 1) in (p-1) Z_{>0}^{n+1}.
std::optional<ExponentVector> example3_witness(const HypersurfaceSpec& h);

/// The configuration {(a_j, 1)} in Z^{n+1}.
ASet augmented_configuration(const HypersurfaceSpec& h);

struct PointCountCheck {
  OracleReport report;
  std::optional<HasseResult> hasse;  ///< invariant of the augmented affine sum
};

/// Compares -H (H the invariant of sum over F_p^{n+1} of Psi(x_{n+1} f)) with N_aff
/// mod p at every lambda in F_p^N, and checks that only the top layer is selected.
PointCountCheck example3_check(const HypersurfaceSpec& h, Int cap, std::uint64_t budget = kDefaultOracleBudget);

struct KatzComparison {
  LatticeVector gamma0;
  GfPoly scaled_F;     ///< (p-1)! F_{gamma0}
  GfPoly coefficient;  ///< coefficient of x^{gamma0} in (x_{n+1} f)^{p-1}
  bool applicable = true;
};

/// Symbolic expansion of (x_{n+1} f_lambda)^{p-1} over F_p[lambda, x].
KatzComparison katz_coefficient(const HypersurfaceSpec& h, const LatticeVector& gamma0, Int cap);

/// katz_coefficient for every gamma0 of the top layer.
OracleReport katz_coefficient_check(const HypersurfaceSpec& h, Int cap);

/// (-1)^{(p-1)/2} sum_i C((p-1)/2, i)^2 l^i
GfPoly legendre_hasse(std::uint32_t p);

/// For lambda != 0, 1: H(lambda) = 0 iff a_p = 0 mod p, and H(lambda) = a_p otherwise,
/// with a_p = p - #{y^2 = x(x-1)(x-lambda)} over F_p^2.
OracleReport legendre_check(std::uint32_t p);

/// Recomputes U_M (or every layer), w_p and the minimizers by scanning {0..q-1}^N.
OracleReport naive_crosscheck(const ASet& A, const LatticeVector& e, std::uint32_t p, unsigned a, std::size_t m,
                              std::uint64_t budget = 1'000'000);

}  // namespace gkz
