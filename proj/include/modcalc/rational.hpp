#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace modcalc {

// All arithmetic in the library is exact; Rational is the only scalar type.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Renders as "p/q" with q > 0, always including the denominator ("13/1").
std::string to_fraction(const Rational& value);

// Accepts "p/q" or a bare integer "p".  Throws CalcError(ParseError).
Rational parse_fraction(std::string_view text);

Rational binomial(long n, long k);

}  // namespace modcalc
