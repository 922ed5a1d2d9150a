#include "symchar/rational.hpp"

#include <cctype>

#include "symchar/error.hpp"

namespace symchar {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

namespace {

// Parses an optionally signed decimal integer starting at `pos`.
Integer parse_integer(std::string_view text, std::size_t& pos, bool allow_sign) {
  const std::size_t start = pos;
  std::string digits;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') digits.push_back('-');
    ++pos;
  }
  const std::size_t first_digit = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    digits.push_back(text[pos++]);
  if (pos == first_digit) {
    throw ParseError("expected digit", pos < text.size() ? pos : start);
  }
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  const Integer num = parse_integer(text, pos, true);
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_pos = pos;
    den = parse_integer(text, pos, false);
    if (den == 0) throw ParseError("zero denominator", den_pos);
  }
  if (pos != text.size()) throw ParseError("unexpected character", pos);
  return make_rational(num, den);
}

}  // namespace symchar
