#pragma once

namespace kmsatake {

// Parses and dispatches one command line. Writes results to stdout and
// diagnostics to stderr. Returns the process exit code: 0 on success,
// 1 for input errors, 2 for window errors, 3 for violated internal
// invariants.
int run_cli(int argc, const char* const* argv);

}  // namespace kmsatake
