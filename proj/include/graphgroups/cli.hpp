#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphgroups::cli {

/// Exit codes: 0 success / found / true, 1 exhausted / none / false,
/// 2 usage or input error.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphgroups::cli
