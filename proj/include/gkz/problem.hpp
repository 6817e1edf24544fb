#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkz/aset.hpp"
#include "gkz/types.hpp"

namespace gkz {

struct Caps {
  Int weight_cap = 0;
  std::optional<Int> relation_norm_cap;  ///< unset: 3 x largest basis 1-norm
  std::uint64_t oracle_budget = 100'000'000;
};

/// One input file: the family sum_j l_j x^{a_j} over F_q with q = p^a, the first m
/// variables toric, twist e, plus optional parameters for individual commands.
struct ProblemSpec {
  std::string name;
  std::uint32_t p = 0;
  unsigned a = 1;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<LatticeVector> A;
  LatticeVector e;
  std::optional<LatticeVector> beta;
  std::optional<ExponentVector> u0;
  std::optional<LatticeVector> gamma;
  std::optional<std::string> oracle;
  std::optional<std::vector<std::uint32_t>> lambda;
  Caps caps;

  std::size_t N() const { return A.size(); }
  ASet aset() const;

  /// Throws InputError on any violated invariant.
  void validate() const;
};

/// Parses the JSON text of a spec; fills in defaults and validates.
ProblemSpec parse_problem(const std::string& json_text);
ProblemSpec load_problem(const std::string& path);

/// `key=value` with key in weight_cap, relation_norm_cap, oracle_budget.
void apply_cap_override(ProblemSpec& spec, const std::string& assignment);

/// 4 a N (p-1)
Int default_weight_cap(std::uint32_t p, unsigned a, std::size_t N);

}  // namespace gkz
