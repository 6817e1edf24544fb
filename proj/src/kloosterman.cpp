#include "gkz/kloosterman.hpp"

#include <algorithm>

#include "gkz/modp.hpp"

namespace gkz::kloosterman {

ASet a_set() { return ASet({{1}, {-1}}); }

bool matches(const ASet& A) { return A == a_set(); }

namespace {

void require_odd(std::uint32_t p) {
  if (!is_prime(p) || p == 2) throw InputError("Kloosterman tables need an odd prime");
}

// c * l1^x * l2^y / (f1! f2!), negated
GfPoly negated_term(std::uint32_t p, Int x, Int y, Int f1, Int f2) {
  FactorialTable t(p);
  std::uint32_t c = mul_mod(t.inv_fact(f1), t.inv_fact(f2), p);
  return GfPoly::monomial(p, {x, y}, -static_cast<Int>(c));
}

}  // namespace

int case_q_p(std::uint32_t p, Int e) {
  require_odd(p);
  const Int P = p;
  if (e < 0 || e >= P - 1) throw InputError("twist outside 0..p-2");
  if (2 * e < P - 1) return 1;
  if (2 * e > P - 1) return 2;
  return 3;
}

GfPoly hasse_q_p(std::uint32_t p, Int e) {
  const Int P = p, h = (P - 1) / 2;
  switch (case_q_p(p, e)) {
    case 1:
      return negated_term(p, e, 0, e, 0);
    case 2:
      return negated_term(p, 0, P - 1 - e, P - 1 - e, 0);
    default:
      return negated_term(p, h, 0, h, 0) + negated_term(p, 0, h, h, 0);
  }
}

int case_q_p2(std::uint32_t p, Int e0, Int e1) {
  require_odd(p);
  const Int P = p;
  if (e0 < 0 || e0 > P - 1 || e1 < 0 || e1 > P - 1) throw InputError("digits outside 0..p-1");
  if ((e0 == 0 && e1 == 0) || (e0 == P - 1 && e1 == P - 1)) throw InputError("twist is 0 mod p^2-1");
  // thresholds (p+1)/2, (p-1)/2, (p-3)/2
  const Int hp = (P + 1) / 2, h = (P - 1) / 2, hm = (P - 3) / 2;
  if ((e0 <= hm && e1 < hp) || (e0 == h && e1 < h)) return 1;
  if ((e0 >= hp && e1 > hm) || (e0 == h && e1 > h)) return 2;
  if (e0 > hp && e1 < hm) return 3;
  if (e0 < hm && e1 > hp) return 4;
  if (e0 == hp && e1 < hm) return 5;
  if (e0 == hm && e1 > hp) return 6;
  if (e0 == h && e1 == h) return 7;
  if (e0 < hm && e1 == hp) return 8;
  if (e0 > hp && e1 == hm) return 9;
  if (e0 == hp && e1 == hm) return 10;
  if (e0 == hm && e1 == hp) return 11;
  throw ConsistencyError("no Kloosterman case for e0=" + std::to_string(e0) + ", e1=" + std::to_string(e1));
}

std::pair<Int, Int> candidate(std::uint32_t p, Int e0, Int e1, int which) {
  const Int P = p;
  switch (which) {
    case 1:
      return {e0, e1};
    case 2:
      return {e0 - P, e1 + 1};
    case 3:
      return {e0 - (P - 1), e1 - (P - 1)};
    case 4:
      return {e0 + 1, e1 - P};
  }
  throw InputError("candidate index must be 1..4");
}

std::vector<int> case_members(int c) {
  switch (c) {
    case 1:
      return {1};
    case 2:
      return {3};
    case 3:
      return {2};
    case 4:
      return {4};
    case 5:
      return {1, 2};
    case 6:
      return {3, 4};
    case 7:
      return {1, 3};
    case 8:
      return {1, 4};
    case 9:
      return {2, 3};
    case 10:
      return {1, 2, 3};
    case 11:
      return {1, 3, 4};
  }
  throw InputError("case number must be 1..11");
}

std::vector<std::pair<Int, Int>> gamma_table(std::uint32_t p, Int e0, Int e1) {
  require_odd(p);
  if (e0 == 0 && e1 == 0) return {{0, 0}};
  std::vector<std::pair<Int, Int>> out;
  for (int which : case_members(case_q_p2(p, e0, e1))) out.push_back(candidate(p, e0, e1, which));
  std::sort(out.begin(), out.end());
  return out;
}

GfPoly hasse_q_p2(std::uint32_t p, Int e0, Int e1) {
  require_odd(p);
  const Int P = p, e = e0 + e1 * P;
  if (e == 0) return GfPoly::constant(p, 2, -1);
  GfPoly H(p, 2);
  for (int which : case_members(case_q_p2(p, e0, e1))) {
    switch (which) {
      case 1:
        H += negated_term(p, e, 0, e0, e1);
        break;
      case 2:
        H += negated_term(p, (e1 + 1) * P, P - e0, P - e0, e1 + 1);
        break;
      case 3:
        H += negated_term(p, 0, P * P - 1 - e, P - 1 - e0, P - 1 - e1);
        break;
      case 4:
        H += negated_term(p, e0 + 1, (P - e1) * P, e0 + 1, P - e1);
        break;
    }
  }
  return H;
}

std::optional<std::string> case_label(const ASet& A, std::uint32_t p, unsigned a, Int e) {
  if (!matches(A) || p == 2 || (a != 1 && a != 2)) return std::nullopt;
  const Int P = p;
  const Int q = a == 1 ? P : P * P;
  Int r = floor_mod(e, q - 1);
  if (a == 1) {
    const char* labels[] = {"", "q=p, e<(p-1)/2", "q=p, e>(p-1)/2", "q=p, e=(p-1)/2"};
    return std::string(labels[case_q_p(p, r)]);
  }
  if (r == 0) return std::string("q=p^2, e=0");
  return "q=p^2, Case " + std::to_string(case_q_p2(p, r % P, r / P));
}

}  // namespace gkz::kloosterman
