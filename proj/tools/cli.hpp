#pragma once

#include <string>
#include <vector>

namespace realreg::cli {

/// Exit codes: 0 ok, 1 usage, 2 parse, 3 domain or hypothesis failure,
/// 4 resource limit. The first output line is "ok" or "error: <kind>".
struct CommandResult {
  int exit_code = 0;
  std::string output;
};

/// `args` excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace realreg::cli
