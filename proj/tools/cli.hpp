#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partcat::cli {

/// Runs the partcat command line on `args` (without the program name).
/// Returns 0 on success, 1 on usage or parse errors, 2 on domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partcat::cli
