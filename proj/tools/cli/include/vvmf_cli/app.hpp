#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vvmf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUndetermined = 3;

// Runs the command line `args` (program name excluded). Descriptors named "-"
// or omitted are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace vvmf::cli
