#pragma once

// Command-line front end. run() takes the arguments after the program name
// and returns the process exit status.

#include <iosfwd>
#include <string>
#include <vector>

namespace vortex::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // I/O error or failed verification
  kBadInput = 2,
  kExceptional = 3,
  kZeroTotal = 4,
  kNotSingular = 5,
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Comma-separated vorticity list, entries trimmed. Throws InvalidVorticity on
/// an empty entry.
std::vector<std::string> split_gamma(const std::string& text);

}  // namespace vortex::cli
