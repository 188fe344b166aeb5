#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chase/rates.hpp"

namespace chase {

// Raised for unreadable, malformed or invalid rate-profile documents. The
// message names the line/column (syntax errors) or the offending field.
class ProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Document layout (JSON):
//   { "name": "optional",
//     "lambda": { "head": [2, 1], "tail": 0.5 },
//     "rho":    { "head": [0.3], "tail": 1 } }
// Flat keys "lambda.head", "lambda.tail", ... are accepted as well. Numbers are
// read as the decimal they spell; strings of the form "p/q" give exact rationals.
RateProfile parse_profile(std::string_view text, std::string_view source = "<profile>");
RateProfile load_profile(const std::filesystem::path& path);

// Inverse of parse_profile; values round-trip exactly.
std::string profile_to_json(const RateProfile& profile, int indent = 2);

}  // namespace chase
