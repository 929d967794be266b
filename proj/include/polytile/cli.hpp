#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polytile {

/// Runs one CLI command (arguments without the program name).  Exit codes:
/// 0 success, 1 checked-and-false results, 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace polytile
