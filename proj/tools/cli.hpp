#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace krullkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBadJson = 65;
inline constexpr int kExitTooLarge = 66;

/// Runs one invocation; `args` excludes the program name. `in` feeds inputs
/// given as "-" or omitted.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace krullkit::cli
