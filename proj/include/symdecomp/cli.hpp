#ifndef SYMDECOMP_CLI_HPP
#define SYMDECOMP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace symdecomp::cli {

/// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_false = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_candidate = 3;

/// args excludes the program name. JSON goes to `out` unless --pretty is set;
/// diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace symdecomp::cli

#endif
