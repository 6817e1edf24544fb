#pragma once

// Fixed instance families used by the acceptance suite and the `corpus` command.

#include <cstdint>
#include <string>
#include <vector>

#include "gkz/aset.hpp"
#include "gkz/oracle.hpp"

namespace gkz::corpus {

inline constexpr std::uint64_t kSeed = 0x5eed2024;

/// Cone in Z^3 spanned by the unit vectors and (1,1,-1).
ASet cone();
LatticeVector cone_beta(std::uint32_t p);

/// Random configurations: n <= 3, N <= 4, entries in [-2,2], no zero or repeated generator.
std::vector<ASet> random_configurations(std::size_t count, std::uint64_t seed = kSeed);

struct SolutionInstance {
  std::string name;
  ASet A;
  LatticeVector beta;
  std::uint32_t p;
};

std::vector<SolutionInstance> solution_instances();

struct InvariantInstance {
  std::string name;
  ASet A;
  LatticeVector e;
  std::uint32_t p;
  unsigned a;
  std::size_t m;
};

/// Toric instances with q in {p, p^2}.
std::vector<InvariantInstance> toric_instances();

/// Affine instances: augmented hypersurface configurations and small random ones.
std::vector<InvariantInstance> affine_instances();

/// Hypersurface families over p in {3,5,7}; members may fail the point-count hypothesis.
std::vector<HypersurfaceSpec> hypersurfaces();

}  // namespace gkz::corpus
