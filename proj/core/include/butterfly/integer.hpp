#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace butterfly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer gcd(const Integer& a, const Integer& b);

/// Least non-negative residue of `a` modulo `m` (m > 0).
Integer floor_mod(const Integer& a, const Integer& m);

/// Floor division for a signed numerator and positive divisor.
Integer floor_div(const Integer& a, const Integer& m);

/// Inverse of `a` modulo `m` in [0, m). Throws NotCoprime when gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

/// |x| <= 2^53 - 1, i.e. representable exactly as a JSON number.
bool is_json_safe(const Integer& x);

std::int64_t to_int64(const Integer& x);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Fixed-point decimal rendering of an exact rational, rounded half away
/// from zero at `digits` fractional digits. No floating point involved.
std::string to_fixed(const Rational& x, unsigned digits);

Integer parse_integer(const std::string& text);

}  // namespace butterfly
