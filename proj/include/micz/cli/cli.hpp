#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace micz::cli {

/// Runs the command line front end with the given arguments (argv[0]
/// excluded). Reports go to `out`, diagnostics to `err`. Returns 0 iff every
/// selected check passed, 1 on a failed check and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace micz::cli
