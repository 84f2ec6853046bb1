#ifndef BURSTKIT_CLI_HPP
#define BURSTKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace burstkit {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitRefuted = 3,
  kExitCap = 4,
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burstkit

#endif  // BURSTKIT_CLI_HPP
