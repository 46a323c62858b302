#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minorforge {

// Entry point behind the `minorforge` binary, separated so tests can drive
// the command surface and capture its streams. `args` excludes argv[0].
//
// Exit codes: 0 success / model found; 1 hypothesis not met, no minor, or
// infeasible constants; 2 randomized failure or exhausted budget; 3 bad
// input (malformed file, precondition violation, unknown flags).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minorforge
