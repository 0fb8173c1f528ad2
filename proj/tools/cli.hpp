#pragma once

#include <iosfwd>

namespace rays::cli {

/// Runs one command line. Exit status 0 on success, 1 on a domain error,
/// 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rays::cli
