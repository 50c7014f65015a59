#pragma once

#include <iosfwd>

namespace lexirev {

/// Exit status of a command: 0 affirmative, 1 negative, 2 error.
enum ExitCode : int { ExitAffirmative = 0, ExitNegative = 1, ExitError = 2 };

/// Runs the lexirev command line with argv[0] as the program name. Reports go
/// to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lexirev
