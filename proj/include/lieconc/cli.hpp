#pragma once

#include <iosfwd>

namespace lieconc {

/// Command-line entry point. Exit codes: 0 success, 1 computation error (or a
/// failed acceptance criterion under `reproduce`), 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lieconc
