#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gg {

// Runs the command line given argv-style args (program name excluded).
// Exit codes: 0 success, 1 honest negative (graphs differ, no equilibria,
// failed checks, cross-check mismatch), 2 usage or input errors, 3 a
// resource bound was exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gg
