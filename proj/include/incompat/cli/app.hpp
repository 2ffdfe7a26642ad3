#pragma once

#include <iosfwd>

namespace incompat::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_input_error = 2,
    exit_cap_exceeded = 3,
};

// Entry point of the command-line tool. Reports go to `out` (or --output),
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace incompat::cli
