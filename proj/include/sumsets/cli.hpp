#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumsets {

// Dispatches one CLI invocation (argv without the program name).
// Exit status: 0 success, 1 usage/input error, 2 theorem falsification
// (campaign counterexample), 3 internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sumsets
