#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoideal::cli {

enum ExitCode : int { ok = 0, parse_error = 1, precondition = 2, disagreement = 3 };

/// Runs one command line (args excludes the program name) and returns the
/// exit status. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoideal::cli
