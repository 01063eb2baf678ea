#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zmt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFitFailure = 2;

// Runs the command line `args` (without the program name) and returns the
// process exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zmt::cli
