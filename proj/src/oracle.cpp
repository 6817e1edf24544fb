#include "gkz/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "gkz/kernels.hpp"
#include "gkz/lattice.hpp"
#include "gkz/modp.hpp"
#include "gkz/pweight.hpp"

namespace gkz {

void OracleReport::record(bool good, const std::string& what) {
  ++checked;
  if (good) {
    ++passed;
  } else {
    failures.push_back(what);
  }
}

namespace {

std::atomic<unsigned> g_threads{1};

// Runs body(i) for i in [0, count) on the configured number of threads. Each index
// is handled by exactly one thread, so per-index output slots need no locking.
void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& body) {
  unsigned threads = std::max(1u, g_threads.load());
  if (threads == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::uint64_t i = t; i < count; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::uint64_t checked_power(std::uint64_t base, std::size_t k, std::uint64_t budget, const char* what) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > budget / base) throw CapExhausted(std::string(what) + " exceeds the oracle budget");
    r *= base;
  }
  return r;
}

std::string lambda_text(const std::vector<std::uint32_t>& lam) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < lam.size(); ++i) os << (i ? "," : "") << lam[i];
  os << ')';
  return os.str();
}

}  // namespace

void set_oracle_threads(unsigned threads) { g_threads.store(std::max(1u, threads)); }
unsigned oracle_threads() { return g_threads.load(); }

void HypersurfaceSpec::validate() const {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (n == 0) throw InputError("hypersurface needs at least one variable");
  if (monomials.empty()) throw InputError("hypersurface needs at least one monomial");
  Int degree = -1;
  for (const auto& a : monomials) {
    if (a.size() != n) throw InputError("monomial has wrong number of exponents");
    Int d = 0;
    for (Int x : a) {
      if (x < 0) throw InputError("negative exponent in a polynomial");
      d += x;
    }
    if (d == 0) throw InputError("constant monomial in a homogeneous form");
    if (degree >= 0 && d != degree) throw InputError("monomials of different degrees");
    degree = d;
  }
  if (!lambda.empty() && lambda.size() != monomials.size()) throw InputError("one coefficient per monomial expected");
}

std::string HypersurfaceSpec::describe() const {
  std::ostringstream os;
  os << "p=" << p << " f=";
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    os << (j ? "+" : "") << "l" << (j + 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (monomials[j][i] == 0) continue;
      os << "*x" << (i + 1);
      if (monomials[j][i] != 1) os << '^' << monomials[j][i];
    }
  }
  return os.str();
}

PointCounter::PointCounter(std::uint32_t p, std::size_t n, std::vector<std::vector<Int>> monomials,
                           std::uint64_t budget)
    : p_(p), nmono_(monomials.size()) {
  points_ = checked_power(p, n, budget, "point count");
  columns_.assign(nmono_ * points_, 0);
  for (std::uint64_t idx = 0; idx < points_; ++idx) {
    auto x = grid_point(idx, p, n);
    for (std::size_t j = 0; j < nmono_; ++j) {
      std::uint32_t v = 1;
      for (std::size_t i = 0; i < n; ++i) v = mul_mod(v, pow_mod(x[i], static_cast<std::uint64_t>(monomials[j][i]), p), p);
      columns_[j * points_ + idx] = v;
    }
  }
}

std::uint64_t PointCounter::count(const std::vector<std::uint32_t>& lambda) const {
  if (lambda.size() != nmono_) throw InputError("one coefficient per monomial expected");
  std::vector<std::uint32_t> coeffs(lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j) coeffs[j] = lambda[j] % p_;
  return kernels::count_zero_combinations(columns_, static_cast<std::size_t>(points_), coeffs, p_);
}

std::uint64_t count_affine_zeros(const HypersurfaceSpec& h, std::uint64_t budget) {
  h.validate();
  if (h.lambda.size() != h.monomials.size()) throw InputError("coefficients required for a point count");
  return PointCounter(h.p, h.n, h.monomials, budget).count(h.lambda);
}

std::optional<ExponentVector> example3_witness(const HypersurfaceSpec& h) {
  h.validate();
  const Int top = static_cast<Int>(h.p) - 1;
  const std::size_t N = h.monomials.size();
  ExponentVector u(N, 0);
  std::optional<ExponentVector> found;
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
    if (found) return;
    if (i + 1 == N) {
      u[i] = left;
      for (std::size_t c = 0; c < h.n; ++c) {
        Int s = 0;
        for (std::size_t j = 0; j < N; ++j) s += u[j] * h.monomials[j][c];
        if (s <= 0 || s % top != 0) return;
      }
      found = u;
      return;
    }
    for (Int x = 0; x <= left; ++x) {
      u[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (top > 0) rec(0, top);
  return found;
}

ASet augmented_configuration(const HypersurfaceSpec& h) {
  std::vector<LatticeVector> gens;
  for (const auto& a : h.monomials) {
    LatticeVector g = a;
    g.push_back(1);
    gens.push_back(std::move(g));
  }
  return ASet(std::move(gens));
}

PointCountCheck example3_check(const HypersurfaceSpec& h, Int cap, std::uint64_t budget) {
  h.validate();
  PointCountCheck out;
  out.report.instance = "example3 " + h.describe();
  if (!example3_witness(h)) {
    out.report.skipped = true;
    out.report.note = "no u with sum p-1 and sum u_i (a_i,1) in (p-1)Z_{>0}^{n+1}";
    return out;
  }
  const std::size_t N = h.monomials.size();
  const std::uint64_t grid = checked_power(h.p, N, budget, "coefficient grid");
  checked_power(h.p, h.n, budget / grid, "coefficient grid times point count");

  ASet A = augmented_configuration(h);
  out.hasse = hasse_affine(A, LatticeVector(h.n + 1, 0), h.p, 1, 0, cap);
  const HasseResult& H = *out.hasse;
  out.report.record(H.verified, "invariant not verified");
  out.report.record(H.contributing_layers == std::vector<std::size_t>{h.n + 1},
                    "layers other than the top one attain the bound");
  out.report.record(H.C == static_cast<Int>(h.p) - 1, "top layer p-weight is " + std::to_string(H.C));

  const std::vector<std::uint32_t> predicted = evaluate_on_grid(-H.H);
  PointCounter counter(h.p, h.n, h.monomials, budget);
  std::vector<std::uint64_t> counts(grid);
  parallel_for(grid, [&](std::uint64_t idx) { counts[idx] = counter.count(grid_point(idx, h.p, N)); });
  for (std::uint64_t idx = 0; idx < grid; ++idx) {
    const std::uint32_t naff = static_cast<std::uint32_t>(counts[idx] % h.p);
    const bool good = naff == predicted[idx];
    if (good) {
      out.report.record(true, "");
    } else {
      out.report.record(false, "lambda=" + lambda_text(grid_point(idx, h.p, N)) + ": N_aff=" +
                                   std::to_string(counts[idx]) + " but -H=" + std::to_string(predicted[idx]));
    }
  }
  return out;
}

KatzComparison katz_coefficient(const HypersurfaceSpec& h, const LatticeVector& gamma0, Int cap) {
  h.validate();
  const std::size_t N = h.monomials.size(), n = h.n;
  if (gamma0.size() != n + 1) throw InputError("gamma0 must have n+1 coordinates");
  const std::uint32_t p = h.p;
  const std::size_t total = N + n + 1;

  GfPoly g(p, total);
  for (std::size_t j = 0; j < N; ++j) {
    ExponentVector ex(total, 0);
    ex[j] = 1;
    for (std::size_t i = 0; i < n; ++i) ex[N + i] = h.monomials[j][i];
    ex[N + n] = 1;
    g.add_term(ex, 1);
  }
  GfPoly expanded = pow(g, p - 1);

  KatzComparison cmp{gamma0, GfPoly(p, N), GfPoly(p, N)};
  for (const auto& [ex, c] : expanded.terms()) {
    if (!std::equal(gamma0.begin(), gamma0.end(), ex.begin() + static_cast<std::ptrdiff_t>(N))) continue;
    cmp.coefficient.add_term(ExponentVector(ex.begin(), ex.begin() + static_cast<std::ptrdiff_t>(N)), c);
  }

  ASet A = augmented_configuration(h);
  WeightReport rep = weight_and_minimals(A, gamma0, cap);
  if (rep.status == SearchStatus::NotMember) return cmp;
  if (rep.status != SearchStatus::Found) throw CapExhausted("membership of gamma0 undecided");
  FactorialTable table(p);
  for (const auto& u : rep.minimals) {
    std::uint32_t c = table.fact(static_cast<Int>(p) - 1);
    for (Int x : u) {
      if (x > static_cast<Int>(p) - 1) {
        cmp.applicable = false;
        return cmp;
      }
      c = mul_mod(c, table.inv_fact(x), p);
    }
    cmp.scaled_F.add_term(u, c);
  }
  return cmp;
}

OracleReport katz_coefficient_check(const HypersurfaceSpec& h, Int cap) {
  h.validate();
  OracleReport rep;
  rep.instance = "katz " + h.describe();
  if (!example3_witness(h)) {
    rep.skipped = true;
    rep.note = "hypothesis not satisfiable";
    return rep;
  }
  ASet A = augmented_configuration(h);
  HasseResult H = hasse_affine(A, LatticeVector(h.n + 1, 0), h.p, 1, 0, cap);
  const LayerReport& top = H.layers.back();
  for (const auto& seq : top.sequences) {
    KatzComparison cmp = katz_coefficient(h, seq.gammas.front(), cap);
    rep.record(cmp.applicable && cmp.scaled_F == cmp.coefficient,
               "gamma0=" + to_string(cmp.gamma0) + ": (p-1)!F=" + cmp.scaled_F.to_string() +
                   " coefficient=" + cmp.coefficient.to_string());
  }
  if (top.sequences.empty()) rep.note = "top layer has no gamma sequences";
  return rep;
}

GfPoly legendre_hasse(std::uint32_t p) {
  if (!is_prime(p) || p == 2) throw InputError("Legendre family needs an odd prime");
  const Int h = (static_cast<Int>(p) - 1) / 2;
  FactorialTable t(p);
  GfPoly H(p, 1);
  const Int sign = (h % 2 == 0) ? 1 : -1;
  for (Int i = 0; i <= h; ++i) {
    std::uint32_t binom = mul_mod(t.fact(h), mul_mod(t.inv_fact(i), t.inv_fact(h - i), p), p);
    H.add_term({i}, sign * static_cast<Int>(mul_mod(binom, binom, p)));
  }
  return H;
}

OracleReport legendre_check(std::uint32_t p) {
  GfPoly H = legendre_hasse(p);
  OracleReport rep;
  rep.instance = "legendre p=" + std::to_string(p);
  // variables (x, y): y^2, x^3, x^2, x
  PointCounter counter(p, 2, {{0, 2}, {3, 0}, {2, 0}, {1, 0}});
  for (std::uint32_t lam = 2; lam < p; ++lam) {
    const std::uint32_t c2 = (1 + lam) % p;
    const std::uint32_t c1 = (p - lam) % p;
    const std::uint64_t naff = counter.count({1, p - 1, c2, c1});
    const Int ap = static_cast<Int>(p) - static_cast<Int>(naff);
    const std::uint32_t ap_mod = mod(ap, p);
    const std::uint32_t hv = H.evaluate(std::vector<std::uint32_t>{lam});
    bool good = (hv == 0) == (ap_mod == 0) && (ap_mod == 0 || hv == ap_mod);
    rep.record(good, "lambda=" + std::to_string(lam) + ": a_p=" + std::to_string(ap) + " H=" + std::to_string(hv));
  }
  return rep;
}

OracleReport naive_crosscheck(const ASet& A, const LatticeVector& e, std::uint32_t p, unsigned a, std::size_t m,
                              std::uint64_t budget) {
  if (e.size() != A.dim()) throw InputError("twist dimension differs from A");
  if (m > A.dim()) throw InputError("toric count exceeds dimension");
  const Int q = checked_pow(p, a);
  const std::size_t N = A.size(), n = A.dim();
  checked_power(static_cast<std::uint64_t>(q), N, budget, "naive enumeration");

  OracleReport rep;
  rep.instance = "crosscheck A=" + std::to_string(N) + " generators p=" + std::to_string(p) + " a=" +
                 std::to_string(a) + " e=" + to_string(e) + " m=" + std::to_string(m);

  const std::size_t nlayers = m == n ? 1 : n - m + 1;
  std::vector<std::vector<ExponentVector>> naive(nlayers);
  ExponentVector u(N, 0);
  while (true) {
    LatticeVector s(n, 0);
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < n; ++j) s[j] += u[i] * A[i][j];
    }
    bool in_class = true;
    for (std::size_t j = 0; j < n; ++j) in_class &= floor_mod(s[j] - e[j], q - 1) == 0;
    if (in_class) naive[m == n ? 0 : affine_support(s, m)].push_back(u);
    std::size_t i = N;
    while (i-- > 0) {
      if (++u[i] < q) break;
      u[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }

  std::vector<std::vector<ExponentVector>> fast;
  if (m == n) {
    fast.push_back(enumerate_U_M(A, MSpec::toric(e, p, a)));
  } else {
    fast = enumerate_U_M_layers(A, e, p, a, m);
  }

  for (std::size_t l = 0; l < nlayers; ++l) {
    const std::string tag = m == n ? "U_M" : "layer " + std::to_string(l);
    rep.record(naive[l] == fast[l], tag + ": enumerations differ (" + std::to_string(naive[l].size()) + " vs " +
                                        std::to_string(fast[l].size()) + ")");
    if (naive[l].empty()) continue;
    Int best = -1;
    std::vector<ExponentVector> argmin;
    for (const auto& v : naive[l]) {
      Int w = 0;
      for (Int x : v) {
        for (Int y = x; y > 0; y /= p) w += y % p;
      }
      if (best < 0 || w < best) {
        best = w;
        argmin.clear();
      }
      if (w == best) argmin.push_back(v);
    }
    PWeightMinimum mm = wp_min(fast[l].empty() ? naive[l] : fast[l], p, a);
    rep.record(mm.wp == best && mm.minimizers == argmin, tag + ": p-weight minimum differs");
  }
  return rep;
}

}  // namespace gkz
