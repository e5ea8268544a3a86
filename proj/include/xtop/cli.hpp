#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xtop {

// Exit codes of the xtop command.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitParse = 2,
    kExitNotXTop = 3,
    kExitAxiom = 4,
};

// Runs the command line `args` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xtop
