#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagcoh {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitCap = 2,
  kExitInternal = 3,
};

// Runs the command-line interface; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagcoh
