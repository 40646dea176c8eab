#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace magnus::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kFails = 1, kParseError = 2, kPrecondition = 3 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace magnus::cli
