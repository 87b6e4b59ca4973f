#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ves {

// Runs the command-line toolkit; args excludes the program name.  All normal
// output goes to `out`, diagnostics to `err`.  Exit codes:
//   0  success
//   1  infeasible parameters / failed limit checks
//   2  usage, file, or parse errors
//   3  numeric failures (overflow, undefined values)
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ves
