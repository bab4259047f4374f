#pragma once

#include <iosfwd>

namespace fglforge {

inline constexpr const char* kToolName = "fgl-forge";
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes: 0 ok, 1 a requested check failed, 2 bad input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fglforge
