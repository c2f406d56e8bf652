#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilpat::cli {

/// Exit codes shared by every command.
inline constexpr int kExitPn = 0;
inline constexpr int kExitNotPn = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBadInput = 65;

/// Runs the `nilpat` command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilpat::cli
