#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mubenc::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command-line harness on argv-style arguments (without the
/// program name). The report goes to `out` unless --out names a file;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mubenc::cli
