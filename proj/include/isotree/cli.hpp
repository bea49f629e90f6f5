#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isotree {

/// Runs the CLI. Exit codes: 0 ok, 1 invalid input, 2 theorem-exception
/// instance, 3 internal assertion failure.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace isotree
