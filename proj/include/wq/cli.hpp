#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wq::cli {

enum ExitCode : int { Ok = 0, InvalidInput = 1, Refused = 2, InvariantFailure = 3 };

/// Runs one witt-quadrics command. args excludes the program name. The JSON
/// report goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wq::cli
