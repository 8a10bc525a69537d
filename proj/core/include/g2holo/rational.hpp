#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace g2holo {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-precision numerator/denominator.
/// Always stored normalized: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& x) { return x.sign(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

/// Renders as "p" when the denominator is 1, else "p/q".
std::string to_token(const Rational& x);

/// Inverse of to_token. Throws std::runtime_error on malformed input.
Rational parse_rational(std::string_view s);

}  // namespace g2holo
