#pragma once

// Command-line front end: parses a system file, runs a detection or ranking
// command and prints a text or JSON report.
//
// Exit codes: 0 success, 1 a detect-* command found no class, 2 input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace sgd {

enum ExitCode : int { exit_ok = 0, exit_no_classes = 1, exit_input_error = 2 };

/// `args` excludes the program name. Input "-" reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace sgd
