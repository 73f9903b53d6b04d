#pragma once

// Command-line front end. Exit codes: 0 success, 1 a verdict failed or a
// computation error occurred, 2 invalid parameters or configuration.

#include <iosfwd>
#include <string>
#include <vector>

namespace qpl::cli {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpl::cli
