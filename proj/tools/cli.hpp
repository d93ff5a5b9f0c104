#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwb::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kCodeVersion = "0.1.0";

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one command line (args excludes the program name). Reports go to
/// out, diagnostics to err; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwb::cli
