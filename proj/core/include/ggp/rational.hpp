#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ggp {

// Arbitrary-precision integers and rationals. GMP keeps mpq_class results of
// arithmetic canonical (lowest terms, positive denominator); values built
// through parse_rational are canonicalized explicitly.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a", "a/b" or "-a/b" with decimal digits. Throws
/// Error(parse_error) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer factorial(unsigned n);

}  // namespace ggp
