#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "wp/errors.hpp"

namespace wp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational scalar. Always stored in lowest terms
/// with a positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(long long n, long long d = 1) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    return Rational(BigInt(n), BigInt(d));
}

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

/// Parses "n" or "n/d" with an optional leading sign. Rejects anything else,
/// in particular decimal points.
Rational rational_from_string(std::string_view text);

std::string to_string(const Rational& r);

}  // namespace wp
