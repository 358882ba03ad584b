#pragma once

#include <iosfwd>

namespace spatch {

// Full command-line surface. Human diagnostics go to out; one
// machine-readable "spatch-error: <kind>: <message>" line goes to err on
// failure. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace spatch
