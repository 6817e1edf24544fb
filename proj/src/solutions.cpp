#include "gkz/solutions.hpp"

#include <algorithm>
#include <set>

#include "gkz/modp.hpp"

namespace gkz {

const char* to_string(BoxKind k) { return k == BoxKind::Normalized ? "normalized" : "classical"; }

const char* to_string(BoxBranch b) {
  switch (b) {
    case BoxBranch::PositiveSum:
      return "positive-sum";
    case BoxBranch::NegativeSum:
      return "negative-sum";
    case BoxBranch::Balanced:
      return "balanced";
  }
  return "?";
}

BoxOperator BoxOperator::make(const ASet& A, RelationVector l, BoxKind kind) {
  if (l.size() != A.size()) throw InputError("relation has wrong length");
  for (Int x : A.combine(l)) {
    if (x != 0) throw InputError("not a relation on A: " + to_string(l));
  }
  return BoxOperator{std::move(l), kind};
}

ExponentVector BoxOperator::plus() const {
  ExponentVector v(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) v[i] = std::max<Int>(l[i], 0);
  return v;
}

ExponentVector BoxOperator::minus() const {
  ExponentVector v(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) v[i] = std::max<Int>(-l[i], 0);
  return v;
}

BoxBranch BoxOperator::branch() const {
  Int s = 0;
  for (Int x : l) s += x;
  if (s > 0) return BoxBranch::PositiveSum;
  if (s < 0) return BoxBranch::NegativeSum;
  return BoxBranch::Balanced;
}

std::vector<EulerOperator> euler_operators(const ASet& A, const LatticeVector& beta) {
  if (beta.size() != A.dim()) throw InputError("parameter dimension differs from A");
  std::vector<EulerOperator> ops(A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    ops[i].i = i;
    ops[i].beta_i = beta[i];
    ops[i].weights.resize(A.size());
    for (std::size_t j = 0; j < A.size(); ++j) ops[i].weights[j] = A[j][i];
  }
  return ops;
}

namespace {

GfPoly sum_with_factorials(const std::vector<ExponentVector>& us, std::size_t nvars, std::uint32_t p) {
  FactorialTable table(p);
  GfPoly f(p, nvars);
  for (const auto& u : us) {
    std::uint32_t c = 1;
    for (Int x : u) c = mul_mod(c, table.inv_fact(x), p);
    f.add_term(u, c);
  }
  return f;
}

GfPoly apply_derivatives(GfPoly f, const ExponentVector& orders) {
  for (std::size_t i = 0; i < orders.size() && !f.is_zero(); ++i) {
    if (orders[i] > 0) f = derivative_power(f, i, orders[i]);
  }
  return f;
}

}  // namespace

GfPoly build_F(const ASet& A, const LatticeVector& gamma, std::uint32_t p, Int cap) {
  Goodness g = classify_goodness(A, gamma, p, cap);
  if (!g.good) throw InputError("gamma is not good: " + to_string(gamma));
  return sum_with_factorials(g.report.minimals, A.size(), p);
}

GfPoly build_G(const ASet& A, const LatticeVector& gamma, std::uint32_t p, Int cap) {
  if (!A.pointed()) throw InputError("A is not pointed, so no gamma is very good");
  Goodness g = classify_goodness(A, gamma, p, cap);
  if (!g.very_good) throw InputError("gamma is not very good: " + to_string(gamma));
  return sum_with_factorials(enumerate_box(A, gamma, static_cast<Int>(p) - 1), A.size(), p);
}

std::vector<GfPoly> euler_residual(const ASet& A, const LatticeVector& beta, const GfPoly& f) {
  if (f.nvars() != A.size()) throw InputError("polynomial arity differs from |A|");
  std::vector<GfPoly> out;
  for (const EulerOperator& z : euler_operators(A, beta)) {
    GfPoly r(f.modulus(), f.nvars());
    for (const auto& [u, c] : f.terms()) {
      Int s = -z.beta_i;
      for (std::size_t j = 0; j < u.size(); ++j) s = checked_add(s, checked_mul(z.weights[j], u[j]));
      r.add_term(u, static_cast<Int>(mul_mod(c, mod(s, f.modulus()), f.modulus())));
    }
    out.push_back(std::move(r));
  }
  return out;
}

GfPoly box_residual(const BoxOperator& op, const GfPoly& f) {
  if (op.l.size() != f.nvars()) throw InputError("relation length differs from polynomial arity");
  if (op.kind == BoxKind::Normalized) {
    switch (op.branch()) {
      case BoxBranch::PositiveSum:
        return apply_derivatives(f, op.plus());
      case BoxBranch::NegativeSum:
        return apply_derivatives(f, op.minus());
      case BoxBranch::Balanced:
        break;
    }
  }
  return apply_derivatives(f, op.plus()) - apply_derivatives(f, op.minus());
}

std::vector<BoxOperator> relation_test_set(const ASet& A, const LatticeVector& gamma, std::uint32_t p,
                                           std::optional<Int> norm_cap) {
  RelationLattice L = relation_kernel_basis(A);
  Int cap = norm_cap.value_or(3 * L.max_basis_norm());
  std::set<RelationVector> rels;
  for (auto& l : L.combinations(3, cap)) rels.insert(std::move(l));
  auto box = enumerate_box(A, gamma, static_cast<Int>(p) - 1);
  for (const auto& u : box) {
    for (const auto& v : box) {
      if (u == v) continue;
      RelationVector l(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) l[i] = u[i] - v[i];
      rels.insert(std::move(l));
    }
  }
  std::vector<BoxOperator> out;
  out.reserve(rels.size());
  for (const auto& l : rels) out.push_back(BoxOperator::make(A, l, BoxKind::Normalized));
  return out;
}

bool SolutionBasis::all_checks_pass() const {
  if (!disjoint_supports) return false;
  for (const auto& e : elements) {
    if (!e.euler_ok || !e.box_ok || e.classical_agrees == false) return false;
  }
  for (const auto& g : very_good) {
    if (!g.euler_ok || !g.classical_box_ok) return false;
  }
  return true;
}

namespace {

bool all_zero(const std::vector<GfPoly>& polys) {
  return std::all_of(polys.begin(), polys.end(), [](const GfPoly& f) { return f.is_zero(); });
}

}  // namespace

SolutionBasis solution_basis(const ASet& A, const LatticeVector& beta, std::uint32_t p, Int cap,
                             std::optional<Int> norm_cap) {
  SolutionBasis out;
  out.catalog = sigma_tau(A, beta, p, cap);
  const bool nonconfluent = A.nonconfluent_form().has_value();

  std::set<ExponentVector> seen;
  for (const auto& [gamma, report] : out.catalog.sigma) {
    BasisElement e{gamma, sum_with_factorials(report.minimals, A.size(), p), false, false, std::nullopt, 0};
    e.euler_ok = all_zero(euler_residual(A, beta, e.F));
    auto tests = relation_test_set(A, gamma, p, norm_cap);
    e.relations_tested = tests.size();
    e.box_ok = true;
    bool agree = true;
    for (auto& op : tests) {
      GfPoly normalized = box_residual(op, e.F);
      if (!normalized.is_zero()) e.box_ok = false;
      if (nonconfluent) {
        op.kind = BoxKind::Classical;
        if (!(box_residual(op, e.F) == normalized)) agree = false;
      }
    }
    if (nonconfluent) e.classical_agrees = agree;
    for (const auto& [u, c] : e.F.terms()) {
      if (!seen.insert(u).second) out.disjoint_supports = false;
    }
    out.elements.push_back(std::move(e));
  }

  for (const auto& gamma : out.catalog.tau) {
    VeryGoodElement g{gamma, sum_with_factorials(enumerate_box(A, gamma, static_cast<Int>(p) - 1), A.size(), p)};
    g.euler_ok = all_zero(euler_residual(A, beta, g.G));
    auto tests = relation_test_set(A, gamma, p, norm_cap);
    g.relations_tested = tests.size();
    g.classical_box_ok = true;
    for (auto& op : tests) {
      op.kind = BoxKind::Classical;
      if (!box_residual(op, g.G).is_zero()) g.classical_box_ok = false;
    }
    out.very_good.push_back(std::move(g));
  }
  return out;
}

}  // namespace gkz
