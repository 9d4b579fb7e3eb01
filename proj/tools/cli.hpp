#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rotinv::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kBadInput = 1;  // malformed data file
inline constexpr int kBadFlags = 2;  // flag validation failure

/// Runs one command. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rotinv::cli
