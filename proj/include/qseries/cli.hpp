#pragma once

#include <iosfwd>

namespace qseries::cli {

/// Entry point of the qseries command line. Returns the process exit code:
/// 0 success, 1 identity failure or mismatch, 2 usage or domain error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qseries::cli
