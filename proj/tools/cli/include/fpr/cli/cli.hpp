#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpr::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // e.g. an acceptance criterion failed
inline constexpr int kDomainViolation = 2;
inline constexpr int kParseError = 3;
inline constexpr int kSizeLimit = 4;
inline constexpr int kUsage = 64;

/// Runs the `fpr` command line. `args` excludes the program name. Profiles
/// are read from the named file or, when absent or "-", from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace fpr::cli
