#include "gkz/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>

#include "gkz/corpus.hpp"
#include "gkz/hasse.hpp"
#include "gkz/kloosterman.hpp"
#include "gkz/modp.hpp"
#include "gkz/oracle.hpp"
#include "gkz/pweight.hpp"
#include "gkz/series0.hpp"
#include "gkz/solutions.hpp"

namespace gkz::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxDetails = 5;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (details.size() < kMaxDetails) details.push_back(what);
  }

  // Runs body and turns any exception into a recorded failure.
  template <class F>
  void guarded(const std::string& where, F&& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      check(false, where + ": " + ex.what());
    }
  }
};

Int cap_for(std::uint32_t p, unsigned a, std::size_t N) { return 4 * static_cast<Int>(a * N) * (static_cast<Int>(p) - 1); }

// Factorials mod p computed from scratch so the closed forms do not share code with the library.
std::vector<std::uint32_t> plain_factorials(std::uint32_t p) {
  std::vector<std::uint32_t> f(p, 1);
  for (std::uint32_t k = 1; k < p; ++k) f[k] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(f[k - 1]) * k % p);
  return f;
}

std::uint32_t plain_inverse(std::uint32_t x, std::uint32_t p) {
  std::uint64_t r = 1, b = x % p;
  for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

Int plain_digit_sum(Int x, std::uint32_t p) {
  Int s = 0;
  for (; x > 0; x /= p) s += x % p;
  return s;
}

CriterionResult finish(int id, std::string title, const Tally& t, double secs, double limit, bool within) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.checks = t.checks;
  r.failures = t.failures;
  r.details = t.details;
  r.seconds = secs;
  r.limit_seconds = limit;
  r.within_time = within;
  r.passed = t.failures == 0 && t.checks > 0 && within;
  return r;
}

// 1 -------------------------------------------------------------------------
CriterionResult cone_closed_forms() {
  const auto t0 = Clock::now();
  Tally t;
  const ASet A = corpus::cone();
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    t.guarded("p=" + std::to_string(p), [&] {
      const Int h = (static_cast<Int>(p) - 1) / 2;
      const auto fact = plain_factorials(p);
      GfPoly F = build_F(A, corpus::cone_beta(p), p, cap_for(p, 1, 4));

      GfPoly factorial_form(p, 4);
      for (Int l = 0; l <= h; ++l) {
        std::uint32_t d = static_cast<std::uint32_t>(static_cast<std::uint64_t>(fact[h - l]) * fact[l] % p);
        d = static_cast<std::uint32_t>(static_cast<std::uint64_t>(d) * d % p);
        factorial_form.add_term({h - l, h - l, l, l}, plain_inverse(d, p));
      }
      t.check(F == factorial_form, "p=" + std::to_string(p) + ": F=" + F.to_string() + " expected " +
                                       factorial_form.to_string());

      // unit (-1)^{(p+1)/2} h!^2, which is 1 mod p
      Int unit = static_cast<Int>(static_cast<std::uint64_t>(fact[h]) * fact[h] % p);
      if (((p + 1) / 2) % 2 == 1) unit = -unit;
      t.check(floor_mod(unit, p) == 1, "p=" + std::to_string(p) + ": rescaling unit is not 1 mod p");
      GfPoly binomial_form(p, 4);
      const Int sign = h % 2 == 0 ? -1 : 1;  // -(-1)^h
      for (Int l = 0; l <= h; ++l) {
        std::uint64_t c = static_cast<std::uint64_t>(fact[h]) * plain_inverse(fact[l], p) % p;
        c = c * plain_inverse(fact[h - l], p) % p;
        binomial_form.add_term({h - l, h - l, l, l}, sign * static_cast<Int>(c * c % p));
      }
      GfPoly rescaled = F.scaled(unit);
      t.check(rescaled == binomial_form, "p=" + std::to_string(p) + ": rescaled F=" + rescaled.to_string() +
                                             " expected " + binomial_form.to_string());
    });
  }
  const double s = seconds_since(t0);
  return finish(1, "example configuration closed forms, p in {3,5,7,11}", t, s, 1.0, s < 1.0);
}

// 2 -------------------------------------------------------------------------
CriterionResult kloosterman_q_p() {
  Tally t;
  double total = 0, worst = 0;
  const ASet K = kloosterman::a_set();
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const auto t0 = Clock::now();
    for (Int e = 0; e + 1 < static_cast<Int>(p); ++e) {
      const std::string where = "p=" + std::to_string(p) + " e=" + std::to_string(e);
      t.guarded(where, [&] {
        HasseResult r = hasse_toric(K, {e}, p, 1, cap_for(p, 1, 2));
        GfPoly expected = kloosterman::hasse_q_p(p, e);
        t.check(r.verified && r.H == expected, where + ": H=" + r.H.to_string() + " expected " + expected.to_string());
      });
    }
    const double s = seconds_since(t0);
    total += s;
    worst = std::max(worst, s);
  }
  return finish(2, "Kloosterman q=p table, p in {3,5,7,11,13}, limit per p", t, total, 1.0, worst < 1.0);
}

// 3 -------------------------------------------------------------------------
CriterionResult kloosterman_q_p2() {
  Tally t;
  double total = 0, worst = 0;
  const ASet K = kloosterman::a_set();
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const auto t0 = Clock::now();
    const Int P = p, q = P * P;
    for (Int e = 0; e < q - 1; ++e) {
      const Int e0 = e % P, e1 = e / P;
      const std::string where = "p=" + std::to_string(p) + " e=(" + std::to_string(e0) + "," + std::to_string(e1) + ")";
      t.guarded(where, [&] {
        HasseResult r = hasse_toric(K, {e}, p, 2, cap_for(p, 2, 2));
        std::vector<std::pair<Int, Int>> gammas;
        for (const auto& s : r.sequences) gammas.emplace_back(s.gammas.at(0).at(0), s.gammas.at(1).at(0));
        std::sort(gammas.begin(), gammas.end());
        t.check(gammas == kloosterman::gamma_table(p, e0, e1), where + ": gamma sequences differ from the case table");
        GfPoly expected = kloosterman::hasse_q_p2(p, e0, e1);
        t.check(r.verified && r.H == expected, where + ": H=" + r.H.to_string() + " expected " + expected.to_string());
      });
    }
    const double s = seconds_since(t0);
    total += s;
    worst = std::max(worst, s);
  }
  return finish(3, "Kloosterman q=p^2 eleven-case table, p in {5,7,11}, limit per p", t, total, 30.0, worst < 30.0);
}

// 4 -------------------------------------------------------------------------
CriterionResult annihilation() {
  const auto t0 = Clock::now();
  Tally t;
  for (const auto& inst : corpus::solution_instances()) {
    t.guarded(inst.name, [&] {
      SolutionBasis b = solution_basis(inst.A, inst.beta, inst.p, cap_for(inst.p, 1, inst.A.size()));
      t.check(!b.elements.empty(), inst.name + ": empty basis");
      for (const auto& e : b.elements) {
        t.check(e.euler_ok, inst.name + " gamma=" + to_string(e.gamma) + ": Euler residual nonzero");
        t.check(e.box_ok, inst.name + " gamma=" + to_string(e.gamma) + ": box residual nonzero");
      }
      for (const auto& g : b.very_good) {
        t.check(g.euler_ok && g.classical_box_ok, inst.name + " gamma=" + to_string(g.gamma) + ": G residual nonzero");
      }
      t.check(b.disjoint_supports, inst.name + ": supports overlap");
    });
  }
  const double s = seconds_since(t0);
  return finish(4, "operator annihilation over the solution corpus", t, s, 0, true);
}

// 5 -------------------------------------------------------------------------
CriterionResult partition_and_equality() {
  const auto t0 = Clock::now();
  Tally t;
  for (const auto& inst : corpus::toric_instances()) {
    t.guarded(inst.name, [&] {
      const Int cap = cap_for(inst.p, inst.a, inst.A.size());
      MSpec spec = MSpec::toric(inst.e, inst.p, inst.a);
      auto U = enumerate_U_M(inst.A, spec);
      if (U.empty()) {
        t.check(true, "");
        return;
      }
      PWeightMinimum minimum = wp_min(U, inst.p, inst.a);
      Int best = -1;
      for (const auto& u : U) {
        Int w = 0;
        for (Int x : u) w += plain_digit_sum(x, inst.p);
        best = best < 0 ? w : std::min(best, w);
        DigitDecomposition d = digits(inst.A, u, inst.p, inst.a);
        t.check(d.pweight == w, inst.name + ": p-weight of " + to_string(u));
        WeightEquality we = weight_equality(inst.A, d, cap);
        t.check(we.consistent(), inst.name + ": equality criterion fails at " + to_string(u));
      }
      t.check(best == minimum.wp, inst.name + ": minimum p-weight");
      auto seqs = gamma_sequences(inst.A, spec, minimum, cap);
      std::multiset<ExponentVector> covered;
      for (const auto& s : seqs) covered.insert(s.members.begin(), s.members.end());
      std::multiset<ExponentVector> expected(minimum.minimizers.begin(), minimum.minimizers.end());
      t.check(covered == expected, inst.name + ": classes do not partition U_M,min");
    });
  }
  const double s = seconds_since(t0);
  return finish(5, "partition of minimizers and weight equality criterion, q in {p,p^2}", t, s, 0, true);
}

// 6 -------------------------------------------------------------------------
CriterionResult point_counts() {
  const auto t0 = Clock::now();
  Tally t;
  std::size_t used = 0;
  for (const auto& h : corpus::hypersurfaces()) {
    t.guarded(h.describe(), [&] {
      PointCountCheck c = example3_check(h, cap_for(h.p, 1, h.monomials.size()));
      if (c.report.skipped) return;
      ++used;
      for (std::size_t k = 0; k < c.report.checked; ++k) t.checks++;
      t.failures += c.report.checked - c.report.passed;
      for (const auto& f : c.report.failures) {
        if (t.details.size() < kMaxDetails) t.details.push_back(h.describe() + ": " + f);
      }
    });
  }
  t.check(used > 0, "no hypersurface satisfied the hypothesis");
  const double s = seconds_since(t0);
  return finish(6, "affine point counts agree with -H mod p on every coefficient vector", t, s, 60.0, s < 60.0);
}

// 7 -------------------------------------------------------------------------
CriterionResult katz_identity() {
  const auto t0 = Clock::now();
  Tally t;
  for (const auto& h : corpus::hypersurfaces()) {
    t.guarded(h.describe(), [&] {
      OracleReport r = katz_coefficient_check(h, cap_for(h.p, 1, h.monomials.size()));
      if (r.skipped) return;
      t.checks += r.checked;
      t.failures += r.checked - r.passed;
      for (const auto& f : r.failures) {
        if (t.details.size() < kMaxDetails) t.details.push_back(h.describe() + ": " + f);
      }
    });
  }
  const double s = seconds_since(t0);
  return finish(7, "(p-1)! F equals the trace coefficient of (x_{n+1} f)^{p-1}", t, s, 0, true);
}

// 8 -------------------------------------------------------------------------
CriterionResult truncation_congruence() {
  const auto t0 = Clock::now();
  Tally t;
  const ASet E = corpus::cone();
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Int h = (static_cast<Int>(p) - 1) / 2;
    const std::string where = "cone p=" + std::to_string(p);
    t.guarded(where, [&] {
      SeriesReport r = verify_truncation_congruence({h, h, 0, 0}, corpus::cone_beta(p), E, p, cap_for(p, 1, 4));
      t.check(r.passed(), where + ": " + (r.failures.empty() ? std::string("failed") : r.failures.front()));
    });
  }
  std::size_t from_corpus = 0;
  for (const auto& inst : corpus::solution_instances()) {
    if (!inst.A.pointed()) continue;
    t.guarded(inst.name, [&] {
      const Int cap = cap_for(inst.p, 1, inst.A.size());
      GoodnessCatalog cat = sigma_tau(inst.A, inst.beta, inst.p, cap);
      RelationLattice L = relation_kernel_basis(inst.A);
      for (const auto& [gamma, rep] : cat.sigma) {
        for (const auto& u0 : rep.minimals) {
          if (support_profile(u0, inst.p, L, cap).minimal != MinimalityStatus::Verified) continue;
          SeriesReport r = verify_truncation_congruence(u0, gamma, inst.A, inst.p, cap);
          ++from_corpus;
          t.check(r.passed(), inst.name + " gamma=" + to_string(gamma) + " u0=" + to_string(u0) + ": " +
                                  (r.failures.empty() ? std::string("failed") : r.failures.front()));
        }
      }
    });
  }
  t.check(from_corpus > 0, "no corpus pair with verified minimal negative support");
  const double s = seconds_since(t0);
  return finish(8, "p-integrality and mod-pi congruence of truncated series", t, s, 0, true);
}

// 9 -------------------------------------------------------------------------
CriterionResult legendre() {
  const auto t0 = Clock::now();
  Tally t;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    t.guarded("p=" + std::to_string(p), [&] {
      OracleReport r = legendre_check(p);
      t.checks += r.checked;
      t.failures += r.checked - r.passed;
      for (const auto& f : r.failures) {
        if (t.details.size() < kMaxDetails) t.details.push_back("p=" + std::to_string(p) + ": " + f);
      }
    });
  }
  const double s = seconds_since(t0);
  return finish(9, "Legendre family: H vanishes exactly at supersingular lambda, H = a_p mod p otherwise", t, s, 10.0,
                s < 10.0);
}

// 10 ------------------------------------------------------------------------
CriterionResult layer_bound() {
  const auto t0 = Clock::now();
  Tally t;
  for (const auto& inst : corpus::affine_instances()) {
    t.guarded(inst.name, [&] {
      const std::size_t n = inst.A.dim(), N = inst.A.size(), top = n - inst.m;
      const Int q = checked_pow(inst.p, inst.a);
      // Independent layer minima by exhaustive enumeration of {0..q-1}^N.
      std::map<std::size_t, Int> naive;
      ExponentVector u(N, 0);
      while (true) {
        LatticeVector s = inst.A.combine(u);
        bool in_class = true;
        for (std::size_t j = 0; j < inst.m; ++j) in_class &= floor_mod(s[j] - inst.e[j], q - 1) == 0;
        for (std::size_t j = inst.m; j < n; ++j) in_class &= s[j] == 0 || s[j] % (q - 1) == 0;
        if (in_class) {
          std::size_t l = 0;
          for (std::size_t j = inst.m; j < n; ++j) l += s[j] != 0;
          Int w = 0;
          for (Int x : u) w += plain_digit_sum(x, inst.p);
          auto it = naive.find(l);
          if (it == naive.end() || w < it->second) naive[l] = w;
        }
        std::size_t i = N;
        while (i-- > 0) {
          if (++u[i] < q) break;
          u[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
      }
      HasseResult r = hasse_affine(inst.A, inst.e, inst.p, inst.a, inst.m, cap_for(inst.p, inst.a, N));
      const Int step = static_cast<Int>(inst.a) * (static_cast<Int>(inst.p) - 1);
      const Int top_wp = naive.count(top) ? naive[top] : -1;
      for (const auto& L : r.layers) {
        const bool naive_empty = !naive.count(L.l);
        t.check(naive_empty == L.empty, inst.name + ": layer " + std::to_string(L.l) + " emptiness");
        if (L.empty || naive_empty) continue;
        t.check(L.wp == naive[L.l], inst.name + ": layer " + std::to_string(L.l) + " p-weight");
        const Int bound = naive[L.l] + static_cast<Int>(top - L.l) * step;
        t.check(bound >= top_wp && L.lemma_holds,
                inst.name + ": layer " + std::to_string(L.l) + " bound " + std::to_string(bound) + " < " +
                    std::to_string(top_wp));
      }
    });
  }
  const double s = seconds_since(t0);
  return finish(10, "layer lower bound over the affine corpus", t, s, 0, true);
}

}  // namespace

std::vector<CriterionResult> run(const std::vector<int>& only) {
  using Fn = CriterionResult (*)();
  const Fn all[] = {cone_closed_forms, kloosterman_q_p, kloosterman_q_p2, annihilation,
                    partition_and_equality, point_counts, katz_identity, truncation_congruence,
                    legendre, layer_bound};
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    out.push_back(all[id - 1]());
  }
  return out;
}

std::string format_line(const CriterionResult& r, bool with_timing) {
  std::string line = std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + ": " +
                     std::to_string(r.checks) + " checks, " + std::to_string(r.failures) + " failures, exact";
  if (with_timing) {
    char buf[96];
    if (r.limit_seconds > 0) {
      std::snprintf(buf, sizeof buf, " (%.3f s, limit %.0f s%s)", r.seconds, r.limit_seconds,
                    r.within_time ? "" : ", EXCEEDED");
    } else {
      std::snprintf(buf, sizeof buf, " (%.3f s)", r.seconds);
    }
    line += buf;
  }
  return line;
}

}  // namespace gkz::acceptance
