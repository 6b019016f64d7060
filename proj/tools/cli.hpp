#pragma once

#include <iosfwd>

namespace permgrid::cli {

/// Runs one command line. Returns 0 on success, 2 on a usage error and 1 on
/// a domain error (reported on `err` as a JSON object).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permgrid::cli
