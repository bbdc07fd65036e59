#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treeadic {

/// Runs one CLI invocation. `args` excludes the program name. Exit codes:
/// 0 success, 1 semantic/validation failure, 2 parse or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treeadic
