#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace portrail::cli
{
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitConfig = 2;  // also unreadable/unwritable files
inline constexpr int kExitData = 3;
inline constexpr int kExitInternal = 4;

// Entry point behind the portrail executable. `args` excludes the program
// name. Never mutates input files; outputs go only to the paths given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace portrail::cli
