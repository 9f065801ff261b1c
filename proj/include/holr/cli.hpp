#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holr::cli {

inline constexpr unsigned long long kDefaultSeed = 7;

/// Exit codes: 0 success, 1 failed check or rejected input, 2 malformed invocation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holr::cli
