#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace epimc::cli {

// Exit codes: 0 true / success, 1 false, 2 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace epimc::cli
