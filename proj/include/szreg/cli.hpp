#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace szreg::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int malformed = 1;
inline constexpr int heuristically_regular = 2;
inline constexpr int class_budget_exceeded = 3;
inline constexpr int irregular_or_unbalanced = 4;
} // namespace exit_code

/// Runs the command line `args` (without the program name). Machine-readable
/// JSON goes to out, human-readable progress and errors to log.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& log);

} // namespace szreg::cli
