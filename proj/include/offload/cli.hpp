#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace offload::cli {

// Runs one CLI invocation (args excludes the program name).
// Exit codes: 0 success, 1 infeasible request or invariant failure,
// 2 usage/input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace offload::cli
