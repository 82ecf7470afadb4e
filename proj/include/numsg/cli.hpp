#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace numsg::cli {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 on a domain error (reported as "error: <code>: <message>"
/// on `err`) and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numsg::cli
