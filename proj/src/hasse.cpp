#include "gkz/hasse.hpp"

#include <algorithm>

#include "gkz/modp.hpp"

namespace gkz {

GfPoly product_form(const std::vector<GammaSequence>& sequences, std::uint32_t p, std::size_t nvars) {
  FactorialTable table(p);
  GfPoly total(p, nvars);
  for (const auto& seq : sequences) {
    GfPoly prod = GfPoly::constant(p, nvars, 1);
    for (std::size_t k = 0; k < seq.minimals.size(); ++k) {
      GfPoly F(p, nvars);
      for (const auto& u : seq.minimals[k]) {
        std::uint32_t c = 1;
        for (Int x : u) c = mul_mod(c, table.inv_fact(x), p);
        F.add_term(u, c);
      }
      prod = prod * frobenius_twist(F, static_cast<unsigned>(k));
    }
    total += prod;
  }
  return total;
}

GfPoly direct_form(const std::vector<ExponentVector>& minimizers, std::uint32_t p, unsigned a, std::size_t nvars) {
  FactorialTable table(p);
  GfPoly out(p, nvars);
  for (const auto& u : minimizers) {
    std::uint32_t c = 1;
    for (Int x : u) {
      for (unsigned k = 0; k < a; ++k) {
        c = mul_mod(c, table.inv_fact(x % p), p);
        x /= p;
      }
    }
    out.add_term(u, c);
  }
  return out;
}

namespace {

void check_degree(HasseResult& r, std::size_t nvars) {
  for (std::size_t i = 0; i < nvars; ++i) {
    if (r.H.degree_in(i) > r.q - 1) r.problems.push_back("degree in l" + std::to_string(i + 1) + " exceeds q-1");
  }
}

void check_agreement(HasseResult& r) {
  if (!(r.H == r.direct)) r.problems.push_back("product form and direct form differ");
}

}  // namespace

HasseResult hasse_toric(const ASet& A, const LatticeVector& e, std::uint32_t p, unsigned a, Int cap) {
  MSpec spec = MSpec::toric(e, p, a);
  if (e.size() != A.dim()) throw InputError("twist dimension differs from A");
  HasseResult r(p, A.size());
  r.q = spec.q;
  auto U = enumerate_U_M(A, spec);
  if (U.empty()) {
    r.empty = true;
    r.verified = true;
    return r;
  }
  PWeightMinimum minimum = wp_min(U, p, a);
  r.C = minimum.wp;
  const Int sign = (A.dim() % 2 == 0) ? 1 : -1;
  r.direct = direct_form(minimum.minimizers, p, a, A.size()).scaled(sign);
  try {
    r.sequences = gamma_sequences(A, spec, minimum, cap);
    r.H = product_form(r.sequences, p, A.size()).scaled(sign);
    check_agreement(r);
  } catch (const CapExhausted& ex) {
    r.H = r.direct;
    r.problems.push_back(std::string("goodness undecided: ") + ex.what());
  }
  if (r.H.is_zero()) r.problems.push_back("H vanishes although U_{M,min} is nonempty");
  check_degree(r, A.size());
  r.verified = r.problems.empty();
  return r;
}

HasseResult hasse_affine(const ASet& A, const LatticeVector& e, std::uint32_t p, unsigned a, std::size_t m, Int cap) {
  const std::size_t n = A.dim();
  if (e.size() != n) throw InputError("twist dimension differs from A");
  if (m >= n) throw InputError("affine sum needs at least one affine variable");
  for (std::size_t j = m; j < n; ++j) {
    if (e[j] != 0) throw InputError("twist must vanish in affine coordinates");
    bool present = false;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (A[i][j] < 0) throw InputError("negative exponent in affine coordinate " + std::to_string(j + 1));
      present |= A[i][j] != 0;
    }
    if (!present) {
      throw InputError("A lies in the coordinate hyperplane x" + std::to_string(j + 1) + " = 0");
    }
  }

  HasseResult r(p, A.size());
  r.affine = true;
  r.q = checked_pow(p, a);
  auto layers = enumerate_U_M_layers(A, e, p, a, m);
  const std::size_t top = n - m;
  if (std::all_of(layers.begin(), layers.end(), [](const auto& L) { return L.empty(); })) {
    throw InputError("every layer M_l is empty");
  }
  if (layers[top].empty()) throw ConsistencyError("top layer empty while a lower layer is not");

  std::vector<PWeightMinimum> minima(layers.size());
  for (std::size_t l = 0; l <= top; ++l) {
    LayerReport rep;
    rep.l = l;
    rep.size = layers[l].size();
    rep.empty = layers[l].empty();
    if (!rep.empty) {
      minima[l] = wp_min(layers[l], p, a);
      rep.wp = minima[l].wp;
    }
    r.layers.push_back(std::move(rep));
  }
  r.C = r.layers[top].wp;

  const Int step = static_cast<Int>(a) * (static_cast<Int>(p) - 1);
  bool undecided = false;
  for (auto& rep : r.layers) {
    if (rep.empty) continue;
    rep.bound = rep.wp + static_cast<Int>(top - rep.l) * step;
    rep.lemma_holds = rep.bound >= r.C;
    rep.selected = rep.bound == r.C;
    if (!rep.lemma_holds) r.problems.push_back("layer " + std::to_string(rep.l) + " violates the lower bound");
    MSpec spec = MSpec::affine_layer(e, p, a, m, rep.l);
    try {
      rep.sequences = gamma_sequences(A, spec, minima[rep.l], cap);
    } catch (const CapExhausted& ex) {
      undecided = true;
      r.problems.push_back(std::string("goodness undecided: ") + ex.what());
    }
    if (!rep.selected) continue;
    if (!undecided && rep.sequences.empty()) throw ConsistencyError("selected layer without gamma sequences");
    r.contributing_layers.push_back(rep.l);
    const Int sign = ((m + rep.l) % 2 == 0) ? 1 : -1;
    r.direct += direct_form(minima[rep.l].minimizers, p, a, A.size()).scaled(sign);
    if (!undecided) {
      r.H += product_form(rep.sequences, p, A.size()).scaled(sign);
      r.sequences.insert(r.sequences.end(), rep.sequences.begin(), rep.sequences.end());
    }
  }
  if (undecided) {
    r.H = r.direct;
  } else {
    check_agreement(r);
  }
  check_degree(r, A.size());
  r.verified = r.problems.empty();
  return r;
}

HasseResult hasse(const ASet& A, const LatticeVector& e, std::uint32_t p, unsigned a, std::size_t m, Int cap) {
  if (m > A.dim()) throw InputError("toric count exceeds dimension");
  if (m == A.dim()) return hasse_toric(A, e, p, a, cap);
  return hasse_affine(A, e, p, a, m, cap);
}

}  // namespace gkz
