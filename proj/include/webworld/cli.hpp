#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace webworld::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

/// Runs one command line (args[0] is the program name) and returns the exit
/// code. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace webworld::cli
