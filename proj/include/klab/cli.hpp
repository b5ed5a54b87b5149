#pragma once

#include <ostream>

namespace klab {

// Exit codes: 0 pass, 1 identity failure, 2 input or domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace klab
