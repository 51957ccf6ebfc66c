#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gw::cli {

/// Runs the ghostweil command line; `args` excludes the program name.
/// Returns the process exit code: 0 success, 1 failed verification or
/// mismatching table, 2 malformed invocation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gw::cli
