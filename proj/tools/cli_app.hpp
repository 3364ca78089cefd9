#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tuniform::cli {

/// Runs one command line (args[0] is the program name). Returns the exit
/// status: 0 success, 1 a check failed, 2 usage or build error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tuniform::cli
