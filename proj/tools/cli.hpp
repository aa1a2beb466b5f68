#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qloss::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

// Parses `args` (without the program name) and runs one subcommand. Data goes to
// `out` unless --output names a file, which is then written atomically. Diagnostics
// go to `err` only.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qloss::cli
