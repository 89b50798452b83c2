#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitRefused = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smw::cli
