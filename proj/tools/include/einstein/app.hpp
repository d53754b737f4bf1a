#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace einstein {

enum ExitCode : int { kOk = 0, kUsage = 2, kNumerical = 3, kMismatch = 4 };

/// Runs the command line (without the program name) and returns the process exit code.
/// JSON goes to out unless --json names a file; warnings and errors go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace einstein
