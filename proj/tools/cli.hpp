#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chase::cli {

// Exit codes.
inline constexpr int kOk = 0;  // success, or expected coexistence for `phase`
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kNoCoexistence = 3;
inline constexpr int kInconclusive = 4;
inline constexpr int kPrecondition = 5;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chase::cli
