#ifndef DOXA_TOOLS_CLI_HPP
#define DOXA_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace doxa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace doxa::cli

#endif  // DOXA_TOOLS_CLI_HPP
