#ifndef LOGITFP_TOOLS_CLI_HPP
#define LOGITFP_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace logitfp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Data goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logitfp::cli

#endif  // LOGITFP_TOOLS_CLI_HPP
