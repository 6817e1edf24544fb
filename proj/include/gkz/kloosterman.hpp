#pragma once

// Closed forms for the twisted Kloosterman family A = {1, -1} over F_p and F_{p^2}:
// the case analysis of Gamma_M and the resulting Hasse invariants, written out
// independently of the general pipeline.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkz/aset.hpp"
#include "gkz/gfpoly.hpp"

namespace gkz::kloosterman {

ASet a_set();

/// True when A is {1, -1} in this order.
bool matches(const ASet& A);

/// q = p, 0 <= e < p-1: case 1 (e < (p-1)/2), 2 (e > (p-1)/2) or 3 (e = (p-1)/2).
int case_q_p(std::uint32_t p, Int e);
GfPoly hasse_q_p(std::uint32_t p, Int e);

/// q = p^2, e = e0 + e1 p with e != 0 and e != p^2 - 1: the case number 1..11.
int case_q_p2(std::uint32_t p, Int e0, Int e1);

/// The candidate sequences Gamma_1..Gamma_4 (index 1-based).
std::pair<Int, Int> candidate(std::uint32_t p, Int e0, Int e1, int which);

/// Indices of the candidates making up Gamma_M in the given case.
std::vector<int> case_members(int case_number);

/// Gamma_M for q = p^2, sorted; e = 0 gives {(0,0)}.
std::vector<std::pair<Int, Int>> gamma_table(std::uint32_t p, Int e0, Int e1);

/// H for q = p^2 from the per-candidate closed forms; e = 0 gives -1.
GfPoly hasse_q_p2(std::uint32_t p, Int e0, Int e1);

/// Human-readable case label, when (A, a, e) has the Kloosterman shape with a in {1, 2}.
std::optional<std::string> case_label(const ASet& A, std::uint32_t p, unsigned a, Int e);

}  // namespace gkz::kloosterman
