#include "gkz/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gkz/modp.hpp"

namespace gkz {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::NotMember:
      return "not-member";
    case SearchStatus::UnknownUpToCap:
      return "not-found-up-to-cap";
  }
  return "?";
}

namespace {

void check_target(const ASet& A, const LatticeVector& beta) {
  if (beta.size() != A.dim()) throw InputError("target dimension differs from A: " + to_string(beta));
}

Int pointed_value(const ASet& A, const LatticeVector& x) {
  const auto& h = A.integral_pointed_form();
  Int v = 0;
  for (std::size_t j = 0; j < x.size(); ++j) v = checked_add(v, checked_mul(h[j], x[j]));
  return v;
}

// Depth-first enumeration of u with sum u = s and sum u_i a_i = target.
// Prunes with per-coordinate ranges of what the remaining generators can reach
// with exactly r units of weight, and with the pointed form when available.
class LevelSearch {
 public:
  explicit LevelSearch(const ASet& A) : A_(A), n_(A.dim()), N_(A.size()) {
    smin_.assign(N_ + 1, std::vector<Int>(n_, 0));
    smax_.assign(N_ + 1, std::vector<Int>(n_, 0));
    for (std::size_t j = 0; j < n_; ++j) {
      smin_[N_ - 1][j] = smax_[N_ - 1][j] = A[N_ - 1][j];
      for (std::size_t i = N_ - 1; i-- > 0;) {
        smin_[i][j] = std::min(smin_[i + 1][j], A[i][j]);
        smax_[i][j] = std::max(smax_[i + 1][j], A[i][j]);
      }
    }
    if (A.pointed()) {
      hval_.resize(N_);
      for (std::size_t i = 0; i < N_; ++i) hval_[i] = pointed_value(A, A[i]);
      hmin_.assign(N_, 0);
      hmax_.assign(N_, 0);
      hmin_[N_ - 1] = hmax_[N_ - 1] = hval_[N_ - 1];
      for (std::size_t i = N_ - 1; i-- > 0;) {
        hmin_[i] = std::min(hmin_[i + 1], hval_[i]);
        hmax_[i] = std::max(hmax_[i + 1], hval_[i]);
      }
    }
  }

  // Calls visit(u) for each solution; visit returns false to stop.
  void run(const LatticeVector& target, Int s, const std::function<bool(const ExponentVector&)>& visit) {
    u_.assign(N_, 0);
    visit_ = &visit;
    stop_ = false;
    LatticeVector t = target;
    descend(0, s, t);
  }

 private:
  bool feasible(std::size_t i, Int r, const LatticeVector& t) const {
    for (std::size_t j = 0; j < n_; ++j) {
      if (t[j] < r * smin_[i][j] || t[j] > r * smax_[i][j]) return false;
    }
    if (!hval_.empty()) {
      Int ht = pointed_value(A_, t);
      if (ht < r * hmin_[i] || ht > r * hmax_[i]) return false;
    }
    return true;
  }

  void descend(std::size_t i, Int r, LatticeVector& t) {
    if (stop_) return;
    if (!feasible(i, r, t)) return;
    if (i + 1 == N_) {
      u_[i] = r;  // feasible() with one generator left forces t == r * a_i
      if (!(*visit_)(u_)) stop_ = true;
      u_[i] = 0;
      return;
    }
    Int taken = 0;
    for (Int x = 0; x <= r && !stop_; ++x) {
      u_[i] = x;
      descend(i + 1, r - x, t);
      for (std::size_t j = 0; j < n_; ++j) t[j] -= A_[i][j];
      ++taken;
    }
    for (std::size_t j = 0; j < n_; ++j) t[j] += taken * A_[i][j];
    u_[i] = 0;
  }

  const ASet& A_;
  std::size_t n_, N_;
  std::vector<std::vector<Int>> smin_, smax_;
  std::vector<Int> hval_, hmin_, hmax_;
  ExponentVector u_;
  const std::function<bool(const ExponentVector&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace

std::optional<Int> decisive_weight_bound(const ASet& A, const LatticeVector& beta) {
  check_target(A, beta);
  if (!A.pointed()) return std::nullopt;
  Int hb = pointed_value(A, beta);
  if (hb < 0) return Int{-1};
  return hb / A.min_pointed_value();
}

Membership semigroup_member(const ASet& A, const LatticeVector& beta, Int cap) {
  if (cap < 0) throw InputError("cap must be nonnegative");
  check_target(A, beta);
  Membership out;
  Int limit = cap;
  auto bound = decisive_weight_bound(A, beta);
  if (bound) limit = *bound;
  LevelSearch search(A);
  for (Int s = 0; s <= limit; ++s) {
    search.run(beta, s, [&](const ExponentVector& u) {
      out.witness = u;
      return false;
    });
    if (out.witness) {
      out.status = SearchStatus::Found;
      out.cap_used = s;
      return out;
    }
  }
  out.cap_used = std::max<Int>(limit, 0);
  out.status = bound ? SearchStatus::NotMember : SearchStatus::UnknownUpToCap;
  return out;
}

WeightReport weight_and_minimals(const ASet& A, const LatticeVector& beta, Int cap) {
  if (cap < 0) throw InputError("cap must be nonnegative");
  check_target(A, beta);
  WeightReport rep;
  rep.target = beta;
  Int limit = cap;
  auto bound = decisive_weight_bound(A, beta);
  if (bound) limit = std::min(cap, *bound);
  LevelSearch search(A);
  for (Int s = 0; s <= limit; ++s) {
    search.run(beta, s, [&](const ExponentVector& u) {
      rep.minimals.push_back(u);
      return true;
    });
    if (!rep.minimals.empty()) {
      std::sort(rep.minimals.begin(), rep.minimals.end());
      rep.weight = s;
      rep.cap_used = s;
      rep.status = SearchStatus::Found;
      return rep;
    }
  }
  rep.cap_used = std::max<Int>(limit, 0);
  rep.status = (bound && *bound <= cap) ? SearchStatus::NotMember : SearchStatus::UnknownUpToCap;
  return rep;
}

std::vector<ExponentVector> enumerate_box(const ASet& A, const LatticeVector& beta, Int k) {
  if (k < 0) throw InputError("box bound must be nonnegative");
  check_target(A, beta);
  const std::size_t n = A.dim(), N = A.size();
  // lo[i][j], hi[i][j]: range of sum_{i' >= i} u_i' a_i'j over the box
  std::vector<std::vector<Int>> lo(N + 1, std::vector<Int>(n, 0)), hi(N + 1, std::vector<Int>(n, 0));
  for (std::size_t i = N; i-- > 0;) {
    for (std::size_t j = 0; j < n; ++j) {
      lo[i][j] = lo[i + 1][j] + k * std::min<Int>(0, A[i][j]);
      hi[i][j] = hi[i + 1][j] + k * std::max<Int>(0, A[i][j]);
    }
  }
  std::vector<ExponentVector> out;
  ExponentVector u(N, 0);
  LatticeVector t = beta;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t[j] < lo[i][j] || t[j] > hi[i][j]) return;
    }
    if (i == N) {
      out.push_back(u);
      return;
    }
    for (Int x = 0; x <= k; ++x) {
      u[i] = x;
      rec(i + 1);
      for (std::size_t j = 0; j < n; ++j) t[j] -= A[i][j];
    }
    for (std::size_t j = 0; j < n; ++j) t[j] += (k + 1) * A[i][j];
    u[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Goodness classify_goodness(const ASet& A, const LatticeVector& gamma, std::uint32_t p, Int cap) {
  if (!is_prime(p)) throw InputError("p must be prime");
  Goodness g;
  g.report = weight_and_minimals(A, gamma, cap);
  if (g.report.status == SearchStatus::NotMember) {
    throw InputError("gamma is not in NA: " + to_string(gamma));
  }
  if (g.report.status == SearchStatus::UnknownUpToCap) {
    throw CapExhausted("membership of " + to_string(gamma) + " undecided up to weight cap " +
                       std::to_string(cap));
  }
  const Int top = static_cast<Int>(p) - 1;
  g.good = std::all_of(g.report.minimals.begin(), g.report.minimals.end(), [&](const ExponentVector& u) {
    return std::all_of(u.begin(), u.end(), [&](Int x) { return x <= top; });
  });
  if (!g.good || !A.pointed()) {
    // Non-pointed A has a nonzero nonnegative relation, so every fiber U+(gamma) is infinite.
    g.very_good = false;
    return g;
  }
  g.very_good = true;
  for (std::size_t i = 0; i < A.size(); ++i) {
    LatticeVector shifted = gamma;
    for (std::size_t j = 0; j < A.dim(); ++j) shifted[j] -= static_cast<Int>(p) * A[i][j];
    if (semigroup_member(A, shifted, 0).status == SearchStatus::Found) {
      g.very_good = false;
      break;
    }
  }
  return g;
}

bool congruent(const LatticeVector& x, const LatticeVector& y, Int m) {
  if (x.size() != y.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (floor_mod(x[j] - y[j], m) != 0) return false;
  }
  return true;
}

GoodnessCatalog sigma_tau(const ASet& A, const LatticeVector& beta, std::uint32_t p, Int cap) {
  check_target(A, beta);
  if (!is_prime(p)) throw InputError("p must be prime");
  // Fold generators one at a time: reachable sums sum c_i a_i with c_i in 0..p-1,
  // each with the least total weight seen (a witness bound for the weight search).
  std::map<LatticeVector, Int> reach{{LatticeVector(A.dim(), 0), 0}};
  for (std::size_t i = 0; i < A.size(); ++i) {
    std::map<LatticeVector, Int> next;
    for (const auto& [s, w] : reach) {
      LatticeVector v = s;
      for (Int c = 0; c < static_cast<Int>(p); ++c) {
        auto [it, inserted] = next.emplace(v, w + c);
        if (!inserted) it->second = std::min(it->second, w + c);
        for (std::size_t j = 0; j < A.dim(); ++j) v[j] += A[i][j];
      }
    }
    reach = std::move(next);
  }
  GoodnessCatalog cat;
  cat.residue_class = beta;
  for (const auto& [gamma, w] : reach) {
    if (!congruent(gamma, beta, p)) continue;
    Goodness g = classify_goodness(A, gamma, p, std::max(cap, w));
    if (g.good) cat.sigma.emplace_back(gamma, std::move(g.report));
    if (g.very_good) cat.tau.push_back(gamma);
  }
  return cat;
}

Int RelationLattice::max_basis_norm() const {
  Int best = 0;
  for (const auto& l : basis) {
    Int s = 0;
    for (Int x : l) s += std::llabs(x);
    best = std::max(best, s);
  }
  return best;
}

std::vector<RelationVector> RelationLattice::combinations(Int coefficient_budget, Int norm_cap) const {
  std::vector<RelationVector> out;
  const std::size_t r = basis.size();
  if (r == 0) return out;
  std::vector<Int> c(r, 0);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t k, Int budget) {
    if (k == r) {
      RelationVector l(num_generators, 0);
      bool nonzero = false;
      for (std::size_t t = 0; t < r; ++t) {
        if (c[t] == 0) continue;
        for (std::size_t i = 0; i < num_generators; ++i) l[i] += c[t] * basis[t][i];
      }
      Int norm = 0;
      for (Int x : l) {
        norm += std::llabs(x);
        nonzero |= x != 0;
      }
      if (nonzero && norm <= norm_cap) out.push_back(std::move(l));
      return;
    }
    for (Int x = -budget; x <= budget; ++x) {
      c[k] = x;
      rec(k + 1, budget - std::llabs(x));
    }
    c[k] = 0;
  };
  rec(0, coefficient_budget);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RelationLattice relation_kernel_basis(const ASet& A) {
  std::vector<std::vector<Int>> rows(A.dim(), std::vector<Int>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < A.dim(); ++j) rows[j][i] = A[i][j];
  }
  RelationLattice L;
  L.num_generators = A.size();
  L.basis = linear::integer_kernel(rows, A.size());
  for (const auto& l : L.basis) {
    for (Int x : A.combine(l)) {
      if (x != 0) throw ConsistencyError("kernel vector does not annihilate A");
    }
  }
  return L;
}

std::optional<linear::RationalVector> nonconfluence_form(const ASet& A) { return A.nonconfluent_form(); }

}  // namespace gkz
