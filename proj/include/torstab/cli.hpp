#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torstab {

// Command-line driver, separated from main() so tests can call it with
// captured streams. args excludes the program name. Exit codes: 0 success,
// 2 invalid input, 3 analysis needs a smooth fan.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace torstab
