#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permstat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`;
/// diagnostics, the invocation line and timing go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permstat::cli
