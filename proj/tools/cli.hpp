#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaingraph::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;  // verify: corrected bound or identity failure; numerical failure
inline constexpr int kInputError = 2;

/// Runs one command line (without the program name) against the given streams.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gaingraph::cli
