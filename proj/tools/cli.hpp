#ifndef STALLINGS_TOOLS_CLI_HPP_
#define STALLINGS_TOOLS_CLI_HPP_

#include <ostream>
#include <span>
#include <string>

namespace stallings::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNotAFreeFactor = 1;  // `complement` only
inline constexpr int kParseError = 2;
inline constexpr int kNotContained = 3;
inline constexpr int kOracleInconclusive = 4;
inline constexpr int kOracleDisagrees = 5;

// args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace stallings::cli

#endif  // STALLINGS_TOOLS_CLI_HPP_
