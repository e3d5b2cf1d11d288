#ifndef QEXTREMAL_CLI_HPP
#define QEXTREMAL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qx {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  /// A condition or bound verdict failed (or a search hit an internal
  /// inconsistency).
  kExitViolation = 1,
  kExitUsage = 2,
};

/// Runs one command line; args excludes the program name.
int run_command(const std::vector<std::string> &args, std::ostream &out,
                std::ostream &err);

} // namespace qx

#endif // QEXTREMAL_CLI_HPP
