#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbcert {

inline constexpr const char *tool_name = "hilbcert";
inline constexpr const char *tool_version = "0.1.0";

enum ExitCode : int { verified = 0, invalid_input = 1, inconclusive = 2, check_failed = 3 };

/// Parses args (without the program name), runs one subcommand and writes
/// the report to out, or to the --out file. Diagnostics go to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hilbcert
