#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace volterra::cli {

/// Entry point behind the `volterra` executable. args[0] is the program
/// name. Returns 0 on success or a passing verification, 1 on a failing
/// verdict or numerical failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace volterra::cli
