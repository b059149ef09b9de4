#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace totalchroma::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitStepFailure = 2;

/// Runs one command line (without the program name). Human-readable output
/// goes to `out`, diagnostics to `err`; machine output goes to files.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace totalchroma::cli
