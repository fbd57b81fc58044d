#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace scrollar {

/// Exit codes: 0 success, 2 invalid input, 3 consistency failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitConsistency = 3;

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Comma-separated integers; surrounding blanks are ignored and an empty
/// string is an empty list. Throws InputError on anything else.
std::vector<int> parse_int_list(const std::string& text, int minimum);

}  // namespace scrollar
