#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace broomlab::cli {

// Exit codes are a stable contract.
inline constexpr int kOk = 0;         // success, property holds, witness found
inline constexpr int kViolated = 1;   // property violated, search exhausted
inline constexpr int kUsage = 2;      // bad flags, parameters or input files
inline constexpr int kInternal = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace broomlab::cli
