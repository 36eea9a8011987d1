#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subcomp {

// Runs one CLI invocation. `args` excludes the program name. Exit status:
// 0 success, 1 usage error, 2 malformed input, 3 resource limit, 4 internal
// consistency failure (a bug).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace subcomp
