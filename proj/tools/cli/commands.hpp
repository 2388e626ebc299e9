#ifndef TRUCKDRONE_CLI_COMMANDS_HPP
#define TRUCKDRONE_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace truckdrone::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitRejected = 1,  // infeasible, not proper, refused, generation failed
  kExitUsage = 2,     // bad flags, unreadable or malformed files
};

/// Runs the command line `args` (without the program name). Always
/// returns one of the ExitCode values.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, bool color = false);

}  // namespace truckdrone::cli

#endif  // TRUCKDRONE_CLI_COMMANDS_HPP
