#include "gkz/pweight.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gkz/modp.hpp"

namespace gkz {

Int DigitDecomposition::level_weight(std::size_t k) const {
  Int s = 0;
  for (Int x : digits.at(k)) s += x;
  return s;
}

Int digit_sum(Int x, std::uint32_t p) {
  if (x < 0) throw InputError("digit sum of a negative integer");
  Int s = 0;
  while (x > 0) {
    s += x % p;
    x /= p;
  }
  return s;
}

DigitDecomposition digits(const ASet& A, const ExponentVector& u, std::uint32_t p, unsigned a) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (a == 0) throw InputError("extension degree must be positive");
  if (u.size() != A.size()) throw InputError("exponent vector length differs from |A|");
  const Int q = checked_pow(p, a);
  DigitDecomposition d;
  d.u = u;
  d.digits.assign(a, ExponentVector(u.size(), 0));
  d.digit_sums.assign(u.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 0 || u[i] > q - 1) throw InputError("entry outside 0..q-1: " + to_string(u));
    Int x = u[i];
    for (unsigned k = 0; k < a; ++k) {
      d.digits[k][i] = x % p;
      d.digit_sums[i] += x % p;
      x /= p;
    }
    d.pweight += d.digit_sums[i];
  }
  for (unsigned k = 0; k < a; ++k) d.gammas.push_back(A.combine(d.digits[k]));
  return d;
}

MSpec MSpec::toric(LatticeVector e, std::uint32_t p, unsigned a) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (a == 0) throw InputError("extension degree must be positive");
  MSpec s;
  s.kind = Kind::Toric;
  s.e = std::move(e);
  s.p = p;
  s.a = a;
  s.q = checked_pow(p, a);
  s.m = s.e.size();
  return s;
}

MSpec MSpec::affine_layer(LatticeVector e, std::uint32_t p, unsigned a, std::size_t m, std::size_t l) {
  MSpec s = toric(std::move(e), p, a);
  if (m > s.e.size()) throw InputError("toric count exceeds dimension");
  if (l > s.e.size() - m) throw InputError("layer index exceeds number of affine coordinates");
  for (std::size_t j = m; j < s.e.size(); ++j) {
    if (s.e[j] != 0) throw InputError("twist must vanish in affine coordinates");
  }
  s.kind = Kind::AffineLayer;
  s.m = m;
  s.l = l;
  return s;
}

std::size_t affine_support(const LatticeVector& x, std::size_t m) {
  std::size_t c = 0;
  for (std::size_t j = m; j < x.size(); ++j) c += x[j] != 0;
  return c;
}

bool MSpec::contains(const LatticeVector& x) const {
  if (x.size() != e.size()) return false;
  if (!congruent(x, e, q - 1)) return false;
  return kind == Kind::Toric || affine_support(x, m) == l;
}

namespace {

// Residue vectors mod (q-1) reachable from generators i..N-1 with multipliers in 0..q-1,
// as a bitmap over the mixed-radix encoding. Empty when the ring is too large to tabulate.
class SuffixReach {
 public:
  SuffixReach(const ASet& A, Int modulus) : A_(A), mod_(modulus), n_(A.dim()) {
    constexpr Int kMaxCells = Int{1} << 22;
    Int cells = 1;
    for (std::size_t j = 0; j < n_; ++j) {
      if (cells > kMaxCells / mod_) return;
      cells *= mod_;
    }
    cells_ = cells;
    const std::size_t N = A.size();
    reach_.assign(N + 1, std::vector<bool>(static_cast<std::size_t>(cells), false));
    reach_[N][0] = true;
    // multipliers 0..q-1 hit the same residues as 0..q-2
    for (std::size_t i = N; i-- > 0;) {
      std::vector<Int> step(n_);
      for (std::size_t j = 0; j < n_; ++j) step[j] = floor_mod(A[i][j], mod_);
      const auto& next = reach_[i + 1];
      auto& cur = reach_[i];
      std::vector<Int> r(n_);
      for (Int code = 0; code < cells; ++code) {
        if (!next[static_cast<std::size_t>(code)]) continue;
        decode(code, r);
        for (Int k = 0; k < mod_; ++k) {
          cur[static_cast<std::size_t>(encode(r))] = true;
          for (std::size_t j = 0; j < n_; ++j) r[j] = (r[j] + step[j]) % mod_;
        }
      }
    }
  }

  bool available() const { return cells_ > 0; }

  bool reachable(std::size_t i, const std::vector<Int>& residue) const {
    return !available() || reach_[i][static_cast<std::size_t>(encode(residue))];
  }

 private:
  Int encode(const std::vector<Int>& r) const {
    Int code = 0;
    for (std::size_t j = 0; j < n_; ++j) code = code * mod_ + r[j];
    return code;
  }
  void decode(Int code, std::vector<Int>& r) const {
    for (std::size_t j = n_; j-- > 0;) {
      r[j] = code % mod_;
      code /= mod_;
    }
  }

  const ASet& A_;
  Int mod_;
  std::size_t n_;
  Int cells_ = 0;
  std::vector<std::vector<bool>> reach_;
};

// Visits every u in {0..q-1}^N with sum u_i a_i = e mod (q-1), passing the exact sum.
void for_each_in_class(const ASet& A, const LatticeVector& e, Int q,
                       const std::function<void(const ExponentVector&, const LatticeVector&)>& visit) {
  if (e.size() != A.dim()) throw InputError("twist dimension differs from A");
  const Int mod = q - 1;
  const std::size_t N = A.size(), n = A.dim();
  SuffixReach reach(A, mod);
  ExponentVector u(N, 0);
  LatticeVector sum(n, 0);
  std::vector<Int> need(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) need[j] = floor_mod(e[j] - sum[j], mod);
    if (!reach.reachable(i, need)) return;
    if (i == N) {
      if (std::all_of(need.begin(), need.end(), [](Int x) { return x == 0; })) visit(u, sum);
      return;
    }
    for (Int x = 0; x < q; ++x) {
      u[i] = x;
      rec(i + 1);
      for (std::size_t j = 0; j < n; ++j) sum[j] = checked_add(sum[j], A[i][j]);
    }
    for (std::size_t j = 0; j < n; ++j) sum[j] -= q * A[i][j];
    u[i] = 0;
  };
  rec(0);
}

}  // namespace

std::vector<ExponentVector> enumerate_U_M(const ASet& A, const MSpec& spec) {
  std::vector<ExponentVector> out;
  for_each_in_class(A, spec.e, spec.q, [&](const ExponentVector& u, const LatticeVector& sum) {
    if (spec.kind == MSpec::Kind::Toric || affine_support(sum, spec.m) == spec.l) out.push_back(u);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<ExponentVector>> enumerate_U_M_layers(const ASet& A, const LatticeVector& e, std::uint32_t p,
                                                              unsigned a, std::size_t m) {
  MSpec base = MSpec::affine_layer(e, p, a, m, 0);
  std::vector<std::vector<ExponentVector>> layers(A.dim() - m + 1);
  for_each_in_class(A, base.e, base.q, [&](const ExponentVector& u, const LatticeVector& sum) {
    layers[affine_support(sum, m)].push_back(u);
  });
  for (auto& layer : layers) std::sort(layer.begin(), layer.end());
  return layers;
}

PWeightMinimum wp_min(const std::vector<ExponentVector>& U_M, std::uint32_t p, unsigned a) {
  if (U_M.empty()) throw InputError("U_M is empty: the sum vanishes identically");
  (void)a;
  PWeightMinimum out;
  out.wp = -1;
  for (const auto& u : U_M) {
    Int w = 0;
    for (Int x : u) w += digit_sum(x, p);
    if (out.wp < 0 || w < out.wp) {
      out.wp = w;
      out.minimizers.clear();
    }
    if (w == out.wp) out.minimizers.push_back(u);
  }
  std::sort(out.minimizers.begin(), out.minimizers.end());
  return out;
}

namespace {

void assemble(const std::vector<std::vector<ExponentVector>>& factors, std::uint32_t p, std::size_t k,
              ExponentVector& u, Int scale, std::vector<ExponentVector>& out) {
  if (k == factors.size()) {
    out.push_back(u);
    return;
  }
  for (const auto& v : factors[k]) {
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += v[i] * scale;
    assemble(factors, p, k + 1, u, scale * p, out);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] -= v[i] * scale;
  }
}

}  // namespace

std::vector<GammaSequence> gamma_sequences(const ASet& A, const MSpec& spec, const PWeightMinimum& minimum, Int cap) {
  std::map<std::vector<LatticeVector>, std::vector<ExponentVector>> classes;
  for (const auto& u : minimum.minimizers) {
    DigitDecomposition d = digits(A, u, spec.p, spec.a);
    classes[d.gammas].push_back(u);
  }

  std::vector<GammaSequence> out;
  std::set<ExponentVector> covered;
  for (auto& [gammas, members] : classes) {
    GammaSequence seq;
    seq.gammas = gammas;
    std::sort(members.begin(), members.end());
    seq.members = members;
    Int weight_sum = 0;
    const DigitDecomposition first = digits(A, members.front(), spec.p, spec.a);
    for (unsigned k = 0; k < spec.a; ++k) {
      Goodness g = classify_goodness(A, gammas[k], spec.p, std::max(cap, first.level_weight(k)));
      if (!g.good) {
        throw ConsistencyError("digit image " + to_string(gammas[k]) + " of a p-weight minimizer is not good");
      }
      seq.weights.push_back(g.report.weight);
      seq.minimals.push_back(g.report.minimals);
      weight_sum += g.report.weight;
    }
    for (const auto& u : members) {
      DigitDecomposition d = digits(A, u, spec.p, spec.a);
      for (unsigned k = 0; k < spec.a; ++k) {
        if (!std::binary_search(seq.minimals[k].begin(), seq.minimals[k].end(), d.digits[k])) {
          throw ConsistencyError("digit vector of " + to_string(u) + " is not minimal for " + to_string(gammas[k]));
        }
      }
    }
    if (weight_sum != minimum.wp) {
      throw ConsistencyError("weights of digit images do not add up to w_p(M)");
    }
    LatticeVector total(A.dim(), 0);
    Int scale = 1;
    for (unsigned k = 0; k < spec.a; ++k) {
      for (std::size_t j = 0; j < A.dim(); ++j) total[j] = checked_add(total[j], checked_mul(scale, gammas[k][j]));
      scale *= spec.p;
    }
    if (!spec.contains(total)) throw ConsistencyError("sum p^k gamma_k is not in M");

    std::vector<ExponentVector> assembled;
    ExponentVector u(A.size(), 0);
    assemble(seq.minimals, spec.p, 0, u, 1, assembled);
    std::sort(assembled.begin(), assembled.end());
    if (assembled != seq.members) {
      throw ConsistencyError("class of " + to_string(gammas.front()) + ",... differs from its assembly");
    }
    for (const auto& v : members) {
      if (!covered.insert(v).second) throw ConsistencyError("classes overlap");
    }
    out.push_back(std::move(seq));
  }
  if (covered.size() != minimum.minimizers.size()) throw ConsistencyError("classes do not cover U_{M,min}");
  return out;
}

WeightEquality weight_equality(const ASet& A, const DigitDecomposition& d, Int cap) {
  WeightEquality eq;
  eq.pweight = d.pweight;
  eq.all_digits_minimal = true;
  for (std::size_t k = 0; k < d.gammas.size(); ++k) {
    WeightReport r = weight_and_minimals(A, d.gammas[k], std::max(cap, d.level_weight(k)));
    if (r.status != SearchStatus::Found) throw ConsistencyError("digit image without a representation");
    eq.gamma_weight_sum += r.weight;
    if (!std::binary_search(r.minimals.begin(), r.minimals.end(), d.digits[k])) eq.all_digits_minimal = false;
  }
  return eq;
}

}  // namespace gkz
