#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubicgray {

// Runs the command line `args` (program name excluded). Listings and reports
// go to `out` unless --output names a file; usage and errors go to `err`.
// Returns 0 when every requested check passes, 1 on a failed check, 2 on
// bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubicgray
