#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhc {

// Runs the command-line surface against explicit streams so tests can drive
// it in-process.  `args` excludes the program name.  Exit codes: 0 success,
// 1 I/O or parse failure, 2 domain or validation failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhc
