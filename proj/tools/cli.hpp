#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace moncat::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kResourceExceeded = 3;

/// Runs one command line (args[0] is the program name). Human-readable lines
/// stream to `out` as checks finish; with --json a single RunReport document
/// is written to `out` instead. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moncat::cli
