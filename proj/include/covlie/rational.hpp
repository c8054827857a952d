#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace covlie {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical reduced form
/// (gcd(|num|, den) = 1, den > 0) by the backing type.
using Rational = boost::multiprecision::cpp_rational;

/// "p" for integers, "p/q" otherwise.
std::string rational_str(const Rational& r);

/// Accepts "p" and "p/q" with optional sign. Throws ParseError.
Rational rational_parse(std::string_view s);

}  // namespace covlie
