#pragma once

#include <iosfwd>
#include <map>
#include <string_view>

#include "flagvar/rational.hpp"
#include "flagvar/roots.hpp"

namespace flagvar::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kParseError = 2, kCapExceeded = 3 };

/// Parses "a1=2,a2=3/4" into 0-based node -> coefficient. The empty string
/// is the zero divisor. Throws ParseError (with the offset into `text`) on
/// bad syntax or a node outside 1..rank. Sign is not checked here.
std::map<int, Rational> parse_divisor(std::string_view text, int rank);

/// Entry point of the `flagvar` binary, usable in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flagvar::cli
