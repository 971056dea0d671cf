#pragma once

#include <ostream>

namespace sidedisk {

// Exit status: 0 success, 1 failed check or computation error, 2 usage error, 3 I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sidedisk
