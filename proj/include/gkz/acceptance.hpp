#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace gkz::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double seconds = 0;
  double limit_seconds = 0;  ///< 0 means untimed
  bool within_time = true;
  std::vector<std::string> details;  ///< first few failure messages
};

/// Runs criteria 1..10 in order; `only` restricts to the listed ids when nonempty.
std::vector<CriterionResult> run(const std::vector<int>& only = {});

/// "PASS [3] title: 42 checks, 0 failures (1.23 s, limit 30 s)"
std::string format_line(const CriterionResult& r, bool with_timing);

}  // namespace gkz::acceptance
