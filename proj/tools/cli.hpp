#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hh::cli {

/// Runs one hhm invocation; results go to `out` (or --out), diagnostics to `err`.
/// Exit codes: 0 success, 2 validation error, 3 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hh::cli
