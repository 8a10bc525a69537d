#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace g2holo::cli {

/// Exit codes: 0 success / check passed, 1 failed mathematical check,
/// 2 input or usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace g2holo::cli
