#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eckart::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Parses and runs one command line. Output goes to `out` unless --out is
/// given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eckart::cli
