#pragma once

#include <iosfwd>

namespace descents {

// Entry point behind the command-line tool. Returns the process exit code:
// 0 on success, 1 when a verification run finds a mismatch, 2 on usage or
// domain errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace descents
