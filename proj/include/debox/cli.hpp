#pragma once

#include <ostream>

namespace debox {

// Exit codes shared by every subcommand.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;    // bad flags/arguments/configuration
inline constexpr int kExitData = 2;     // unreadable or invalid input files
inline constexpr int kExitNumeric = 3;  // numeric failure during computation

// Full command-line driver (subcommands: run, grid, analyze, plot,
// tabulate). Streams are injected so tests can run it in-process.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace debox
