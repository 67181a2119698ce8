#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pcf {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    /// A theorem check was refuted, or an appendix value was not reproduced.
    kExitRefuted = 1,
    /// Bad arguments or a construction failure.
    kExitError = 2,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pcf
