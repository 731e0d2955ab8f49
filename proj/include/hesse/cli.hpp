#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hesse::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  /// A mathematical assertion failed. Unreachable unless the arithmetic is wrong.
  kTripwire = 2,
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of `bytes`; used as the input digest in run reports.
std::string sha256_hex(const std::string& bytes);

}  // namespace hesse::cli
