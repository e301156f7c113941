#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freelat {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes shared by the subcommands.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;  ///< relation does not hold / no witness / entry failed
inline constexpr int kUsage = 2;
inline constexpr int kInvalidEquation = 3;
inline constexpr int kUnbalancedEquation = 4;
}  // namespace exit_code

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Subcommands: decide, ancestor, refute, casebook.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freelat
