#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gl3sw {

/// Runs one CLI invocation. Returns 0 on success, 1 on usage errors, 2 on domain
/// errors (weight outside the required range, non-prime p, ...).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gl3sw
