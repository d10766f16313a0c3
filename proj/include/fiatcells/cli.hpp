#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fiatcells {

/// Exit codes: 0 success, 1 usage or input error, 2 violations found.
enum ExitCode : int { exit_ok = 0, exit_input_error = 1, exit_violations = 2 };

/// Runs one command. `args` excludes the program name. "-" reads a table from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fiatcells
