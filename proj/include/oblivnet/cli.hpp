#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oblivnet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Normal output goes
/// to `out`, diagnostics to `err`. Returns 0 on success, 1 when a
/// verification or check fails, 2 on usage or I/O errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oblivnet
