#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ras::cli {

// Exit codes: 0 answered, 1 answered negatively by a yes/no test, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace ras::cli
