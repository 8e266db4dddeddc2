#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bayesext {

/// Runs the `bayesext` command line on `args` (without the program name).
/// Returns 0 on success, 1 when a check fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bayesext
