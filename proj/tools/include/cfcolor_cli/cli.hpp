#pragma once

#include <ostream>

namespace cfc::cli {

inline constexpr int kExitValid = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSizeLimit = 3;

/// Entry point of the cfcolor tool: subcommands gen, colour, exact, bench
/// and verify. Returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cfc::cli
