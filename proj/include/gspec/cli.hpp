#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gspec {

/// Entry point of the `gspec` tool; `args` excludes the program name.
/// Returns 0 on success or a passing suite, 1 when a suite finds
/// violations, 2 on usage and parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace gspec
