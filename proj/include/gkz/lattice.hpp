#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gkz/aset.hpp"
#include "gkz/types.hpp"

namespace gkz {

enum class SearchStatus {
  Found,           ///< a representation exists (and, for weights, the minimum is exact)
  NotMember,       ///< decided: the target is not in NA
  UnknownUpToCap,  ///< nothing found up to the cap and A is not pointed, or the cap was too small
};

const char* to_string(SearchStatus s);

struct Membership {
  SearchStatus status = SearchStatus::UnknownUpToCap;
  std::optional<ExponentVector> witness;
  Int cap_used = 0;
};

struct WeightReport {
  LatticeVector target;
  Int weight = 0;
  std::vector<ExponentVector> minimals;  ///< U+_min(target), sorted
  Int cap_used = 0;
  SearchStatus status = SearchStatus::UnknownUpToCap;
};

struct Goodness {
  bool good = false;
  bool very_good = false;
  WeightReport report;
};

struct GoodnessCatalog {
  LatticeVector residue_class;
  std::vector<std::pair<LatticeVector, WeightReport>> sigma;  ///< good points, sorted by gamma
  std::vector<LatticeVector> tau;                             ///< very good points, sorted
};

/// Integer basis of L = ker(A) in Z^N.
struct RelationLattice {
  std::size_t num_generators = 0;
  std::vector<RelationVector> basis;

  /// Largest 1-norm among basis vectors (0 for the trivial lattice).
  Int max_basis_norm() const;

  /// Nonzero sum_k c_k basis[k] with sum_k |c_k| <= coefficient_budget and
  /// 1-norm <= norm_cap, deduplicated and sorted.
  std::vector<RelationVector> combinations(Int coefficient_budget, Int norm_cap) const;
};

/// Largest weight level a search has to visit to decide beta in NA when A is pointed.
std::optional<Int> decisive_weight_bound(const ASet& A, const LatticeVector& beta);

/// Searches weight levels 0..cap for u in N^N with sum u_i a_i = beta.
/// When A is pointed the search is always exact.
Membership semigroup_member(const ASet& A, const LatticeVector& beta, Int cap);

/// Smallest weight of a representation and all representations at that weight.
WeightReport weight_and_minimals(const ASet& A, const LatticeVector& beta, Int cap);

/// U+_k(beta): all u with 0 <= u_i <= k and sum u_i a_i = beta, sorted.
std::vector<ExponentVector> enumerate_box(const ASet& A, const LatticeVector& beta, Int k);

/// Good / very good classification. Throws InputError when gamma is not in NA and
/// CapExhausted when membership cannot be decided within cap.
Goodness classify_goodness(const ASet& A, const LatticeVector& gamma, std::uint32_t p, Int cap);

/// sigma_A(beta) and tau_A(beta).
GoodnessCatalog sigma_tau(const ASet& A, const LatticeVector& beta, std::uint32_t p, Int cap);

RelationLattice relation_kernel_basis(const ASet& A);

/// Rational h with h.a_i = 1 for all i, if any.
std::optional<linear::RationalVector> nonconfluence_form(const ASet& A);

/// Componentwise congruence modulo m.
bool congruent(const LatticeVector& x, const LatticeVector& y, Int m);

}  // namespace gkz
