#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcg::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kTimeout = 3,
  kIo = 4,
};

enum class Outcome { Pass, Fail, Skip, Timeout };

/// One line of a verification sweep: `check` applied to one group instance.
struct CheckLine {
  std::string check;
  Outcome outcome;
  std::string detail;
};

/// Exit code of a sweep: any failure wins over any timeout.
int verify_exit_code(const std::vector<CheckLine>& lines);

/// Runs the command line `args` (without the program name). Normal output goes
/// to `out`, diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcg::cli
