#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symcoef::cli {

/// Runs the command line against the given streams and returns the process
/// exit status: 0 success, 1 usage error, 2 domain error, 3 capacity error,
/// 4 internal-consistency error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symcoef::cli
