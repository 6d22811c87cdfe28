#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rsrl::cli {

/// Runs one command line (program name first). Returns the exit code:
/// 0 yes / success, 1 no, 2 error or inconclusive.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsrl::cli
