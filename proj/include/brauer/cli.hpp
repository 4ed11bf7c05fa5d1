#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace brauer {

// Runs the command line tool on `args` (without the program name) and
// returns the exit code: 0 on success, 1 when a requested check fails,
// 2 on errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brauer
