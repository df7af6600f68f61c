#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace spectrum_color {

/// Arbitrary-precision exact rational. Expression templates are disabled so
/// the type behaves as a plain value inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "7", "-3", "0.25", "1e-3" is rejected; "a/b" fractions are accepted.
/// Decimals are converted exactly (0.1 -> 1/10).
Rational parse_rational(std::string_view text);

/// Canonical "a/b" (or "a" when integral).
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Largest g such that a/g and b/g are both integers (a, b > 0).
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace spectrum_color
