#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geneo {

/// Exit codes: 0 every check passed, 1 a check failed, 2 bad input or usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geneo
