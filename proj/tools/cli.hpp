#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unitpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`; text-mode diagnostics go to `err` (JSON mode reports errors on
/// `out` as {"error": ...}).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Re-checks the worked examples and the counting identity; one line per
/// check. Returns true when everything matches.
bool selftest(std::ostream& out);

}  // namespace unitpoly::cli
