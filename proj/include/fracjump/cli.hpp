#pragma once

#include <ostream>

namespace fracjump {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitNotPrimitive = 3,
  kExitBudget = 4,
};

// Runs the fracjump command line. Data goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracjump
