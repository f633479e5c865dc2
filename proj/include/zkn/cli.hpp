#ifndef ZKN_CLI_HPP
#define ZKN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace zkn {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 1,
    kExitConsistency = 2,
};

/// Runs one command.  `args` excludes the program name.  The payload, if the
/// verb takes one, is read from --input or else from `in`; the JSON result goes
/// to --output or else to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace zkn

#endif  // ZKN_CLI_HPP
