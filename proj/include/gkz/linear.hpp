#pragma once

#include <optional>
#include <vector>

#include "gkz/types.hpp"

// Exact linear algebra over Z and Q on small dense systems.
namespace gkz::linear {

using RationalVector = std::vector<Rational>;

/// One constraint coeffs . x >= rhs.
struct Inequality {
  RationalVector coeffs;
  Rational rhs;
};

/// Fourier-Motzkin elimination. Returns a feasible point, or nullopt when the
/// system has no rational solution.
std::optional<RationalVector> solve_inequalities(const std::vector<Inequality>& system,
                                                 std::size_t nvars);

/// Some solution of rows . x = rhs (free variables set to zero), or nullopt if inconsistent.
std::optional<RationalVector> solve_equations(const std::vector<RationalVector>& rows,
                                              const RationalVector& rhs, std::size_t nvars);

/// Rank of an integer matrix given by rows.
std::size_t rank(const std::vector<std::vector<Int>>& rows, std::size_t ncols);

/// Z-basis of { x in Z^ncols : M x = 0 }, where M is given by its rows.
/// Basis vectors are size-reduced and canonically signed (last nonzero entry positive),
/// then sorted lexicographically.
std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& rows,
                                             std::size_t ncols);

/// Coordinates c with sum_k c_k basis[k] = target, or nullopt when target is not
/// in the Q-span. Coordinates are rational in general.
std::optional<RationalVector> coordinates_in_span(const std::vector<std::vector<Int>>& basis,
                                                  const std::vector<Int>& target);

/// Scale a rational vector by the lcm of its denominators.
std::vector<BigInt> clear_denominators(const RationalVector& v);

}  // namespace gkz::linear
