#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cospec::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_false = 3;

/// Runs one command line (without the program name). "-" as a graph path
/// reads from `in`. Returns the process exit code: 0 success, 1 usage error,
/// 2 input or domain error, 3 a clean negative verdict.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cospec::cli
