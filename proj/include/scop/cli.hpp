#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scop::cli {

// Runs one command. args excludes the program name. Returns 0 on success,
// 1 on input/usage errors, 2 on verification failure. Results go to out,
// diagnostics to err.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace scop::cli
