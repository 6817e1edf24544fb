// Acceptance runner: one PASS/FAIL line per criterion, with timings. Exit 1 on any failure.
#include <iostream>

#include "gkz/acceptance.hpp"
#include "gkz/kernels.hpp"

int main() {
  std::cout << "kernel isa: " << gkz::kernels::to_string(gkz::kernels::active_isa()) << "\n";
  bool all = true;
  for (const auto& r : gkz::acceptance::run()) {
    std::cout << gkz::acceptance::format_line(r, true) << "\n";
    for (const auto& d : r.details) std::cout << "    " << d << "\n";
    all &= r.passed;
  }
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return all ? 0 : 1;
}
