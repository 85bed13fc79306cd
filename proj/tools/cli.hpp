#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace interlace::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kParseError = 2;
inline constexpr int kDivergence = 3;
inline constexpr int kVerification = 4;
inline constexpr int kIoError = 5;

// Runs `interlace <derive|window|check|tile> ...`; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace interlace::cli
