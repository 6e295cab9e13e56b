#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stcore::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kOverBudget = 3;

/// Runs the stcore command line. `args` excludes the program name.
/// Normal output goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stcore::cli
