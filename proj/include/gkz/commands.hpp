#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gkz {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

struct CommandOptions {
  std::string command;    ///< solutions | hasse | series | oracle | corpus
  std::string spec_path;  ///< unused by corpus
  std::string format = "json";
  std::vector<std::string> cap_overrides;
  std::vector<int> criteria;  ///< corpus only; empty runs all
};

/// Runs one command and writes its report to `out`; diagnostics go to `err`.
int run_command(const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace gkz
