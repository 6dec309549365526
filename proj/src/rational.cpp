#include "flagvar/rational.hpp"

#include <cctype>
#include <string>

#include "flagvar/error.hpp"

namespace flagvar {

namespace {

// Index one past the run of digits starting at `pos`.
std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  std::size_t end = scan_digits(text, pos);
  if (end == pos) throw ParseError("expected digits in rational '" + std::string(text) + "'", pos);
  std::string numerator(text.substr(0, end));
  if (numerator.front() == '+') numerator.erase(0, 1);
  std::string denominator = "1";
  if (end < text.size()) {
    if (text[end] != '/') {
      throw ParseError("unexpected character in rational '" + std::string(text) + "'", end);
    }
    std::size_t den_begin = end + 1;
    std::size_t den_end = scan_digits(text, den_begin);
    if (den_end == den_begin) {
      throw ParseError("expected denominator digits in '" + std::string(text) + "'", den_begin);
    }
    if (den_end != text.size()) {
      throw ParseError("trailing characters in rational '" + std::string(text) + "'", den_end);
    }
    denominator = std::string(text.substr(den_begin, den_end - den_begin));
    if (mpz_class(denominator) == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'", den_begin);
    }
  }
  Rational q{mpz_class(numerator), mpz_class(denominator)};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace flagvar
