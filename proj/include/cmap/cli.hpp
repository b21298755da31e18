#pragma once

#include <iosfwd>

namespace cmap {

/// Exit codes: 0 success, 1 usage or input error, 2 numerical failure,
/// 3 selftest failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cmap
