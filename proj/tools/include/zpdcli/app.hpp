#pragma once

#include <ostream>

namespace zpdcli {

/// Runs the command line tool; returns the process exit code.
/// 0 holds/ok, 1 fails, 2 invalid input or usage, 3 inconclusive or cap exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zpdcli
