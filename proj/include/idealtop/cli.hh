#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idealtop {

/// Process exit statuses.
enum ExitCode : int {
    kExitOk = 0,
    kExitCounterexample = 1, // verify found a counterexample or a fixture mismatch
    kExitUsage = 2,
    kExitInput = 3,          // unreadable or invalid space-spec file
    kExitBudget = 4,         // a scan ran out of budget before finishing
    kExitInternal = 5,
};

/// Runs one command line. `args[0]` is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace idealtop
