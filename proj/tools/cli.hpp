#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgl::cli {

enum ExitCode : int { kOk = 0, kIoError = 1, kUsage = 2, kVerifyFailed = 3 };

/// Runs one command line (args excludes the program name). Data goes to out
/// when no --out is given; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgl::cli
