#pragma once

#include <iosfwd>

namespace connspace {

// Full command-line front end; returns the process exit code
// (0 success, 1 domain error, 2 usage error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace connspace
