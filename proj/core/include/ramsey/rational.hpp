#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ramsey {

// All thresholds and densities are exact rationals. Irrational quantities
// (k-th roots of rationals) never get materialised: comparisons against them
// are done by powering, so every decision in the library is exact.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct hypothesis_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Accepts "p/q", decimal strings ("0.25", "-3.5e-2"), and plain integers.
Rational parse_rational(std::string_view s);

// "p/q" with q > 0 in lowest terms, or just "p" when integral.
std::string format_rational(const Rational& x);

// Decimal rendering for reports; exact when the denominator is 2^a 5^b,
// otherwise truncated to `digits` fractional digits and suffixed with "~".
std::string approx_decimal(const Rational& x, int digits = 6);

BigInt floor_rational(const Rational& x);
BigInt ceil_rational(const Rational& x);

// Largest even integer <= x; requires x >= 2.
long long floor_even(const Rational& x);
// Largest odd integer <= x; requires x >= 1.
long long floor_odd(const Rational& x);

Rational pow_rational(const Rational& base, unsigned exp);

// Sign of (x - y^(1/root)) for y >= 0, root >= 1. Exact.
int cmp_root(const Rational& x, const Rational& y, unsigned root);

// Does the integer s satisfy s >= (a - b * eta^(1/root)) * k? Requires
// b >= 0, eta >= 0, k > 0. Exact despite the irrational threshold.
bool int_meets_threshold(long long s, const Rational& a, const Rational& b,
                         const Rational& eta, unsigned root, const Rational& k);

// Smallest non-negative integer meeting the threshold above.
long long min_int_meeting_threshold(const Rational& a, const Rational& b,
                                    const Rational& eta, unsigned root,
                                    const Rational& k);

// Largest multiple of 2^-bits that is <= y^(1/root); y >= 0, root >= 1.
// Used to rationalise an irrational fraction conservatively (rounding down
// tightens every condition the fraction parameterises).
Rational rational_root_floor(const Rational& y, unsigned root, unsigned bits = 40);

inline long long to_ll(const BigInt& x) {
    return x.convert_to<long long>();
}

}  // namespace ramsey
