#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrtop {

// Runs the command line (arguments without the program name), writing the
// JSON report to out and diagnostics to err. Returns the process exit code:
// 0 success, 2 input error, 3 precondition violation, 1 internal failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrtop
