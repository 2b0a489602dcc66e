#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace pedalwords {

using Integer = boost::multiprecision::cpp_int;

// Canonical reduced fraction over unbounded integers: gcd(|num|, den) = 1 and
// den > 0 are maintained through all arithmetic, so equality and ordering are
// exact. Every geometric quantity in this library is one of these; no floating
// point participates in any decision.
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den in canonical form; DomainError on den == 0.
Rational make_rational(Integer num, Integer den);

// Accepts "n" or "n/d" with optional leading '-'; reduces. FormatError on
// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Reduced form; whole values print without a slash ("0", "1", "-3").
std::string format_rational(const Rational& r);

}  // namespace pedalwords
