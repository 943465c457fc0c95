#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vbs::cli {

inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kIoError = 2;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vbs::cli
