#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tornheim::cli {

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;         // argument or domain error
inline constexpr int exit_verify_failed = 3;
inline constexpr int exit_precision = 4;

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tornheim::cli
