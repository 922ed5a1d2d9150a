#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symchar {

// Arbitrary-precision integers and rationals. mpq_class keeps results of
// arithmetic in canonical form (reduced, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in canonical form. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Accepts "a", "-a", "a/b" with b != 0. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace symchar
