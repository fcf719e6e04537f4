#pragma once

#include <iosfwd>

namespace leghopf::app {

// Exit codes: 0 success, 1 mismatch or failed invariant, 2 bad flags or input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace leghopf::app
