#include "gkz/linear.hpp"

#include <algorithm>
#include <set>

#include "gkz/modp.hpp"

namespace gkz::linear {

namespace {

// Scale so the first nonzero coefficient has absolute value 1; keeps the
// duplicate filter effective during elimination.
Inequality normalized(Inequality in) {
  for (const auto& c : in.coeffs) {
    if (c != 0) {
      Rational s = c < 0 ? Rational(-c) : c;
      for (auto& x : in.coeffs) x /= s;
      in.rhs /= s;
      break;
    }
  }
  return in;
}

struct InequalityLess {
  bool operator()(const Inequality& a, const Inequality& b) const {
    if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
    return a.rhs < b.rhs;
  }
};

}  // namespace

std::optional<RationalVector> solve_inequalities(const std::vector<Inequality>& system,
                                                 std::size_t nvars) {
  std::vector<std::vector<Inequality>> stages;
  {
    std::set<Inequality, InequalityLess> first;
    for (const auto& in : system) {
      if (in.coeffs.size() != nvars) throw InputError("inequality arity mismatch");
      first.insert(normalized(in));
    }
    stages.emplace_back(first.begin(), first.end());
  }
  for (std::size_t k = 0; k < nvars; ++k) {
    const auto& cur = stages.back();
    std::vector<const Inequality*> pos, neg;
    std::set<Inequality, InequalityLess> next;
    for (const auto& in : cur) {
      if (in.coeffs[k] > 0) {
        pos.push_back(&in);
      } else if (in.coeffs[k] < 0) {
        neg.push_back(&in);
      } else {
        next.insert(in);
      }
    }
    for (const auto* a : pos) {
      for (const auto* b : neg) {
        Rational sa = a->coeffs[k];
        Rational sb = -b->coeffs[k];
        Inequality c;
        c.coeffs.resize(nvars);
        for (std::size_t j = 0; j < nvars; ++j) c.coeffs[j] = a->coeffs[j] / sa + b->coeffs[j] / sb;
        c.coeffs[k] = 0;
        c.rhs = a->rhs / sa + b->rhs / sb;
        next.insert(normalized(std::move(c)));
      }
    }
    stages.emplace_back(next.begin(), next.end());
  }
  for (const auto& in : stages.back()) {
    if (in.rhs > 0) return std::nullopt;
  }

  RationalVector x(nvars, Rational(0));
  for (std::size_t kk = nvars; kk-- > 0;) {
    std::optional<Rational> lo, hi;
    for (const auto& in : stages[kk]) {
      const Rational& c = in.coeffs[kk];
      if (c == 0) continue;
      Rational rest = in.rhs;
      for (std::size_t j = kk + 1; j < nvars; ++j) rest -= in.coeffs[j] * x[j];
      Rational bound = rest / c;
      if (c > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo) {
      x[kk] = *lo;
    } else if (hi) {
      x[kk] = std::min(*hi, Rational(0));
    }
    if (lo && hi && *lo > *hi) throw ConsistencyError("Fourier-Motzkin back-substitution failed");
  }
  return x;
}

std::optional<RationalVector> solve_equations(const std::vector<RationalVector>& rows,
                                              const RationalVector& rhs, std::size_t nvars) {
  std::vector<RationalVector> m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nvars) throw InputError("equation arity mismatch");
    RationalVector r = rows[i];
    r.push_back(rhs[i]);
    m.push_back(std::move(r));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < nvars && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c <= nvars; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m.size(); ++r) {
    if (m[r][nvars] != 0) return std::nullopt;
  }
  RationalVector x(nvars, Rational(0));
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = m[r][nvars];
  return x;
}

std::size_t rank(const std::vector<std::vector<Int>>& rows, std::size_t ncols) {
  std::vector<RationalVector> m;
  for (const auto& r : rows) {
    RationalVector rr;
    for (Int x : r) rr.emplace_back(x);
    m.push_back(std::move(rr));
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  return row;
}

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

// Pairwise size reduction until no basis vector can be shortened by
// subtracting an integer multiple of another.
void size_reduce(std::vector<std::vector<Int>>& basis) {
  bool changed = true;
  int rounds = 0;
  while (changed && rounds++ < 1000) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        Int nj = dot(basis[j], basis[j]);
        if (nj == 0) continue;
        Int num = dot(basis[i], basis[j]);
        // nearest integer to num / nj
        Int k = (2 * num + nj) / (2 * nj);
        if (2 * num + nj < 0 && (2 * num + nj) % (2 * nj) != 0) --k;
        if (k == 0) continue;
        std::vector<Int> cand = basis[i];
        for (std::size_t t = 0; t < cand.size(); ++t) cand[t] = checked_add(cand[t], checked_mul(-k, basis[j][t]));
        if (dot(cand, cand) < dot(basis[i], basis[i])) {
          basis[i] = std::move(cand);
          changed = true;
        }
      }
    }
  }
}

}  // namespace

std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& rows,
                                             std::size_t ncols) {
  // Column operations on M, mirrored on U = identity, until M U is in
  // column echelon form; columns of U past the pivots span the kernel.
  std::vector<std::vector<Int>> m = rows;
  std::vector<std::vector<Int>> u(ncols, std::vector<Int>(ncols, 0));
  for (std::size_t i = 0; i < ncols; ++i) u[i][i] = 1;

  auto col_axpy = [&](std::size_t dst, std::size_t src, Int k) {
    // col[dst] += k * col[src]
    for (auto& r : m) r[dst] = checked_add(r[dst], checked_mul(k, r[src]));
    for (auto& r : u) r[dst] = checked_add(r[dst], checked_mul(k, r[src]));
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (auto& r : m) std::swap(r[a], r[b]);
    for (auto& r : u) std::swap(r[a], r[b]);
  };

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < m.size() && pivot < ncols; ++r) {
    if (m[r].size() != ncols) throw InputError("matrix row length mismatch");
    while (true) {
      // smallest nonzero |entry| among columns pivot.. in row r
      std::size_t best = ncols;
      for (std::size_t c = pivot; c < ncols; ++c) {
        if (m[r][c] != 0 && (best == ncols || std::abs(m[r][c]) < std::abs(m[r][best]))) best = c;
      }
      if (best == ncols) break;
      col_swap(pivot, best);
      bool done = true;
      for (std::size_t c = pivot + 1; c < ncols; ++c) {
        if (m[r][c] == 0) continue;
        Int q = m[r][c] / m[r][pivot];
        col_axpy(c, pivot, -q);
        if (m[r][c] != 0) done = false;
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<std::vector<Int>> basis;
  for (std::size_t c = pivot; c < ncols; ++c) {
    std::vector<Int> v(ncols);
    for (std::size_t i = 0; i < ncols; ++i) v[i] = u[i][c];
    basis.push_back(std::move(v));
  }
  size_reduce(basis);
  for (auto& v : basis) {
    auto it = std::find_if(v.rbegin(), v.rend(), [](Int x) { return x != 0; });
    if (it != v.rend() && *it < 0) {
      for (auto& x : v) x = -x;
    }
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::optional<RationalVector> coordinates_in_span(const std::vector<std::vector<Int>>& basis,
                                                  const std::vector<Int>& target) {
  const std::size_t k = basis.size();
  std::vector<RationalVector> rows(target.size(), RationalVector(k));
  RationalVector rhs(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = basis[j].at(i);
    rhs[i] = target[i];
  }
  return solve_equations(rows, rhs, k);
}

std::vector<BigInt> clear_denominators(const RationalVector& v) {
  BigInt l = 1;
  for (const auto& x : v) {
    BigInt d = boost::multiprecision::denominator(x);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  std::vector<BigInt> out;
  for (const auto& x : v) out.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
  return out;
}

}  // namespace gkz::linear
