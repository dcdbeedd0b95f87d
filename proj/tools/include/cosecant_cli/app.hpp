#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cosecant::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Default decimal precision unless COSECANT_PRECISION is set.
inline constexpr unsigned kDefaultPrecision = 50;
inline constexpr const char* kPrecisionEnv = "COSECANT_PRECISION";

/// Parses `args` (without the program name) and runs the subcommand.
/// Primary output goes to `out` unless --out names a file; diagnostics and
/// usage errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cosecant::cli
