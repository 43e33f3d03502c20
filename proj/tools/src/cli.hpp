#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zsig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;

/// args[0] is the program name. Output goes to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zsig::cli
