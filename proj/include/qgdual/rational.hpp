// Exact rational scalars.
//
// All symbolic computation in this project happens over ℚ[q,q⁻¹]; the
// coefficients are arbitrary-precision rationals so that every identity the
// test suites assert can be checked exactly, with no tolerance.  We use
// Boost.Multiprecision's cpp_rational, which keeps values reduced (gcd 1,
// positive denominator) as an invariant of the type itself.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qgdual {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "3/2", "-1", "0" — denominator omitted when it is 1.
[[nodiscard]] std::string rat_str(const Rational& r);

// Inverse of rat_str; accepts "n" and "n/d".
[[nodiscard]] Rational rat_parse(const std::string& s);

[[nodiscard]] double rat_double(const Rational& r);

// r^n for integer n (n may be negative; r must be nonzero then).
[[nodiscard]] Rational rat_pow(const Rational& r, long n);

}  // namespace qgdual
