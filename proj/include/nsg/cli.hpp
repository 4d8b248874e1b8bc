#pragma once

#include <iosfwd>

namespace nsg::cli {

/// Runs one command line. Returns 0 on success, 1 when a check fails or a
/// consistency check trips, 2 on usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nsg::cli
