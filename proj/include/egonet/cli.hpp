#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace egonet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// args excludes the program name. Diagnostics go to `err`; data only to files.
int run(const std::vector<std::string>& args, std::ostream& err);

}  // namespace egonet::cli
