#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropkit {

// Command-line front end. `args` excludes the program name.
// Exit codes: 0 success / certified, 1 refuted or failing examples,
// 2 invalid input or usage, 3 inconclusive.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropkit
