#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace signedpaths::cli {

/// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signedpaths::cli
