#pragma once

// Data-parallel inner loops used by the brute-force oracles and by grid
// evaluation of polynomials. Every kernel has a scalar reference
// implementation and an AVX2 variant; the variant is chosen at runtime
// from the CPU's capabilities and the two are tested for equality.
//
// Layout: `columns` holds `coeffs.size()` columns of `length` residues each,
// column j at offset j * length. All residues and coefficients are < p.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace gkz::kernels {

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa);

/// Best instruction set supported by this build and CPU.
Isa detected_isa();

/// Instruction set used by the dispatching entry points.
Isa active_isa();

/// Force a particular implementation (nullopt restores detection). Requests for
/// an unsupported ISA fall back to Scalar.
void set_isa_override(std::optional<Isa> isa);

/// out[i] = (sum_j coeffs[j] * columns[j][i]) mod p
void combine_mod(std::span<const std::uint32_t> columns, std::size_t length,
                 std::span<const std::uint32_t> coeffs, std::uint32_t p, std::span<std::uint32_t> out);

/// #{ i : sum_j coeffs[j] * columns[j][i] == 0 mod p }
std::uint64_t count_zero_combinations(std::span<const std::uint32_t> columns, std::size_t length,
                                      std::span<const std::uint32_t> coeffs, std::uint32_t p);

namespace scalar {
void combine_mod(std::span<const std::uint32_t> columns, std::size_t length,
                 std::span<const std::uint32_t> coeffs, std::uint32_t p, std::span<std::uint32_t> out);
std::uint64_t count_zero_combinations(std::span<const std::uint32_t> columns, std::size_t length,
                                      std::span<const std::uint32_t> coeffs, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
/// True when this binary contains the AVX2 translation unit.
bool compiled();
void combine_mod(std::span<const std::uint32_t> columns, std::size_t length,
                 std::span<const std::uint32_t> coeffs, std::uint32_t p, std::span<std::uint32_t> out);
std::uint64_t count_zero_combinations(std::span<const std::uint32_t> columns, std::size_t length,
                                      std::span<const std::uint32_t> coeffs, std::uint32_t p);
}  // namespace avx2

}  // namespace gkz::kernels
