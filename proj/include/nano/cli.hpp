#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nano::cli {

/// Runs the nanoinv command line. `args` excludes the program name.
/// Returns 0 on success, 1 on a domain error (or a failing verify suite),
/// 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nano::cli
