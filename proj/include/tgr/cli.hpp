#ifndef TGR_CLI_HPP
#define TGR_CLI_HPP

#include <ostream>

namespace tgr {

// Exit codes of the command-line driver.
inline constexpr int exit_ok = 0;
inline constexpr int exit_false = 1;
inline constexpr int exit_inconclusive = 2;
inline constexpr int exit_usage = 64;
inline constexpr int exit_data = 65;

/// Runs the `tgr` command line; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tgr

#endif  // TGR_CLI_HPP
