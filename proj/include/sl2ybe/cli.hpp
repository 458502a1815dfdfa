#pragma once

// Command-line front end. `run` never calls exit(); it returns the process
// exit code: 0 pass, 1 check failure, 2 usage or input error.

#include <iosfwd>

namespace sl2ybe {

inline constexpr const char* kVersion = "0.1.0";

int run(int argc, const char* const* argv);
/// Same, with explicit streams (used by the tests).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sl2ybe
