#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flagvar {

using Rational = mpq_class;

/// Parses "p/q" or an integer, with an optional leading sign. The result is
/// canonical (lowest terms, positive denominator). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace flagvar
