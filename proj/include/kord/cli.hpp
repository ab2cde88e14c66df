#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kord {

// The whole command-line tool: args exclude the program name; machine
// output goes to out, diagnostics to err.  Returns the process exit code:
// 0 success, 1 bad input or bounds, 2 negative answer, 3 internal bug.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace kord
