#ifndef COMPTEST_TOOLS_CLI_HPP
#define COMPTEST_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace comptest::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;   // check failure, invalid sheets
inline constexpr int kError = 2;  // I/O, load, env, allocation, usage

/// Runs `comptest <args...>`. `args` excludes the program name. Artifacts go
/// to `out` unless written to a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace comptest::cli

#endif  // COMPTEST_TOOLS_CLI_HPP
