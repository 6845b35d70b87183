#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgw::cli {

/// Runs the qgw command line. Returns the process exit code:
/// 0 success, 1 I/O failure, 2 validation failure, 3 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, for in-process callers; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgw::cli
