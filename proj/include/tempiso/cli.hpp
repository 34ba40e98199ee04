#pragma once

#include <iosfwd>

namespace tempiso {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBadArguments = 2;
inline constexpr int kExitParseFailure = 3;
inline constexpr int kExitResourceLimit = 4;

/// Entry point of the `tempiso` tool, writing to the given streams instead of
/// the process's standard ones.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tempiso
