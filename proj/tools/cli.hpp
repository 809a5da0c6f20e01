// Entry point of the command-line tool, separated from main() so tests can
// drive the full argument-parsing and output path in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hessideals {

// Runs one invocation. `args` excludes the program name. Returns the
// process exit code: 0 success, 1 verification failure, 2 usage error.
// Data payloads go to `out` (or the --output file), logs and errors to
// `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hessideals
