#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkz/aset.hpp"
#include "gkz/gfpoly.hpp"
#include "gkz/pweight.hpp"

namespace gkz {

struct LayerReport {
  std::size_t l = 0;
  std::size_t size = 0;  ///< |U_{M_l}|
  bool empty = true;
  Int wp = -1;           ///< w_p(M_l), -1 when empty
  Int bound = -1;        ///< w_p(M_l) + a(n-m-l)(p-1)
  bool lemma_holds = true;
  bool selected = false;
  std::vector<GammaSequence> sequences;
};

struct HasseResult {
  GfPoly H;
  GfPoly direct;  ///< the same invariant summed directly over U_{M,min}
  Int C = 0;      ///< w_p(M) (toric) or w_p(M_{n-m}) (affine)
  Int q = 0;
  bool affine = false;
  bool empty = false;
  bool verified = false;
  std::vector<std::string> problems;
  std::vector<GammaSequence> sequences;  ///< toric case
  std::vector<LayerReport> layers;       ///< affine case
  std::vector<std::size_t> contributing_layers;

  HasseResult(std::uint32_t p, std::size_t nvars) : H(p, nvars), direct(p, nvars) {}
};

/// prod_k F_{gamma_k}(l^{p^k}) summed over the given sequences.
GfPoly product_form(const std::vector<GammaSequence>& sequences, std::uint32_t p, std::size_t nvars);

/// sum over u of l^u / prod_{j,k} u_j^(k)!
GfPoly direct_form(const std::vector<ExponentVector>& minimizers, std::uint32_t p, unsigned a, std::size_t nvars);

/// All variables toric: H = (-1)^n sum over Gamma_M.
HasseResult hasse_toric(const ASet& A, const LatticeVector& e, std::uint32_t p, unsigned a, Int cap);

/// Variables m..n-1 (0-based) affine: sum over the layers M_l attaining the
/// lower bound, each with sign (-1)^(m+l).
HasseResult hasse_affine(const ASet& A, const LatticeVector& e, std::uint32_t p, unsigned a, std::size_t m, Int cap);

/// Toric when m == n, affine otherwise.
HasseResult hasse(const ASet& A, const LatticeVector& e, std::uint32_t p, unsigned a, std::size_t m, Int cap);

}  // namespace gkz
