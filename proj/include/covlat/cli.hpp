#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covlat {

// Runs one CLI invocation (args exclude the program name) and returns the
// process exit status: 0 success / affirmative, 1 negative verdict, 2 input
// error, 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covlat
