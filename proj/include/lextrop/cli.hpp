#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lextrop {

// Exit codes: 0 success, 1 computation or precondition failure, 2 parse
// error, 3 internal inconsistency (a cross-checked invariant was violated).
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_parse_error = 2;
inline constexpr int exit_inconsistency = 3;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lextrop
