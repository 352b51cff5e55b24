#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symfun::cli {

/// Runs one invocation; args exclude the program name.
/// Returns 2 on parse and input errors, 1 when a check's overall verdict is false, 0 otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symfun::cli
