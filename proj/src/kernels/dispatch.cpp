#include <atomic>

#include "gkz/kernels.hpp"

namespace gkz::kernels {

#ifndef GKZ_HAVE_AVX2_TU
namespace avx2 {
bool compiled() { return false; }
void combine_mod(std::span<const std::uint32_t> columns, std::size_t length,
                 std::span<const std::uint32_t> coeffs, std::uint32_t p, std::span<std::uint32_t> out) {
  scalar::combine_mod(columns, length, coeffs, p, out);
}
std::uint64_t count_zero_combinations(std::span<const std::uint32_t> columns, std::size_t length,
                                      std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  return scalar::count_zero_combinations(columns, length, coeffs, p);
}
}  // namespace avx2
#endif

namespace {

// -1: no override
std::atomic<int> g_override{-1};

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

const char* to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa isa = (avx2::compiled() && cpu_has_avx2()) ? Isa::Avx2 : Isa::Scalar;
  return isa;
}

Isa active_isa() {
  int o = g_override.load(std::memory_order_relaxed);
  if (o < 0) return detected_isa();
  Isa want = static_cast<Isa>(o);
  return (want == Isa::Avx2 && detected_isa() != Isa::Avx2) ? Isa::Scalar : want;
}

void set_isa_override(std::optional<Isa> isa) {
  g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void combine_mod(std::span<const std::uint32_t> columns, std::size_t length,
                 std::span<const std::uint32_t> coeffs, std::uint32_t p, std::span<std::uint32_t> out) {
  if (active_isa() == Isa::Avx2) {
    avx2::combine_mod(columns, length, coeffs, p, out);
  } else {
    scalar::combine_mod(columns, length, coeffs, p, out);
  }
}

std::uint64_t count_zero_combinations(std::span<const std::uint32_t> columns, std::size_t length,
                                      std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  if (active_isa() == Isa::Avx2) return avx2::count_zero_combinations(columns, length, coeffs, p);
  return scalar::count_zero_combinations(columns, length, coeffs, p);
}

}  // namespace gkz::kernels
