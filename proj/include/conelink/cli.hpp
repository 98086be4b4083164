#pragma once

#include <iosfwd>

namespace conelink {

// Full command-line front end, driven in-process so tests can capture the
// streams. Returns the process exit status: 0 success, 1 domain error,
// 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace conelink
