#pragma once

#include <ostream>

namespace steklov::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kParseError = 2;
inline constexpr int kNumericalError = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace steklov::cli
