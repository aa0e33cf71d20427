#ifndef TERQF_COMMANDS_HPP
#define TERQF_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace terqf {

/// Exit codes of the command-line tool.
enum ExitCode
{
    exit_ok = 0,
    exit_mismatch = 1,
    exit_usage = 2,
    exit_precondition = 3,
    exit_internal = 4,
};

/// Runs `terqf <args...>` (program name excluded) against the given streams.
int run_cli(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

}  // namespace terqf

#endif
