#ifndef SUBARR_RATIONAL_HPP
#define SUBARR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace subarr {

// Exact arbitrary-precision rational scalar. cpp_rational keeps the value
// normalized (gcd(|num|, den) = 1, den > 0), which is exactly the canonical
// form the subspace code relies on for equality tests.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" decimal strings (either part may carry a sign; the
// result is normalized). Throws Error(Input) on anything else, including
// q = 0.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

} // namespace subarr

#endif
