#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rcards {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,  // verification found violations (witness printed)
  kExitUsage = 2,      // usage, parse or parameter error
  kExitSizeGuard = 3,  // enumeration budget exceeded
};

// Entry point of the `rcards` tool. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcards
