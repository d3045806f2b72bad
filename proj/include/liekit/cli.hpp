#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace liekit {

inline constexpr const char* kToolVersion = "0.3.1";
/// Environment variable that replaces the built-in default seed.
inline constexpr const char* kSeedEnvVar = "LIEKIT_SEED";

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out is given; diagnostics go to `err`.
/// Exit codes: 0 all checks pass, 1 a check found a violation, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liekit
