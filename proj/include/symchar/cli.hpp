#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symchar::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsageError = 2;

// Hard limit on --max-k regardless of other flags.
inline constexpr int kHardMaxK = 9;

// Runs the command line `args` (args[0] is the program name) and returns the
// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symchar::cli
