#pragma once

#include <iosfwd>

namespace satcore {

/// Entry point of the `satcore` tool. Returns 0 on success, 1 on a usage
/// error and 2 on a runtime failure. All I/O goes through the given streams
/// except files named by --out, --in and --trace-out.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace satcore
