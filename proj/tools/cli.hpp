#ifndef SHARPMEANS_TOOLS_CLI_HPP
#define SHARPMEANS_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sharpmeans::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolated = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kFinderFailure = 3;

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sharpmeans::cli

#endif // SHARPMEANS_TOOLS_CLI_HPP
