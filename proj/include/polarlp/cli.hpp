#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polarlp::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kInfeasible = 2,
  kUnbounded = 3,
};

/// Runs one command. `args` excludes the program name:
///   <command> [--dir <rationals>] [--x <rationals>] [--y <rationals>]
///             [--solver fm|enum] <input-file | ->
/// Results go to `out`, diagnostics to `err`. `in` is read when the input
/// path is `-`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

std::string usage();

} // namespace polarlp::cli
