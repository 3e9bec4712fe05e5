#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lagrel {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,   // malformed file or flags, violated precondition
  kExitBoundExceeded = 2,  // closure exceeded --max-components or its round bound
  kExitCheckFailed = 3,    // a verify suite or root system validation failed
  kExitInternal = 4,       // an internal consistency assertion fired
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lagrel
