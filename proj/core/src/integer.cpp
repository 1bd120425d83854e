#include "butterfly/integer.hpp"

#include "butterfly/errors.hpp"

#include <limits>

namespace butterfly {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidFraction: return "InvalidFraction";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotFriendly: return "NotFriendly";
    case ErrorCode::DegenerateDifference: return "DegenerateDifference";
    case ErrorCode::TailDirectionMismatch: return "TailDirectionMismatch";
    case ErrorCode::NoTail: return "NoTail";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InconsistentChernPair: return "InconsistentChernPair";
    case ErrorCode::NotCCell: return "NotCCell";
    case ErrorCode::ParabolicWord: return "ParabolicWord";
    case ErrorCode::EllipticWord: return "EllipticWord";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer floor_div(const Integer& a, const Integer& m) {
  return (a - floor_mod(a, m)) / m;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m <= 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  if (m == 1) return 0;
  // Extended Euclid on (a mod m, m).
  Integer old_r = floor_mod(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1)
    throw Error(ErrorCode::NotCoprime, to_string(a) + " has no inverse modulo " + to_string(m));
  return floor_mod(old_s, m);
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  Integer s = isqrt(n);
  return s * s == n;
}

bool is_json_safe(const Integer& x) {
  static const Integer limit = (Integer(1) << 53) - 1;
  return x <= limit && x >= -limit;
}

std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::InvalidArgument, "value " + to_string(x) + " exceeds 64 bits");
  return x.convert_to<std::int64_t>();
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  const Integer& d = boost::multiprecision::denominator(x);
  if (d == 1) return to_string(boost::multiprecision::numerator(x));
  return to_string(boost::multiprecision::numerator(x)) + "/" + to_string(d);
}

std::string to_fixed(const Rational& x, unsigned digits) {
  Integer scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  const bool negative = num < 0;
  if (negative) num = -num;
  // round(|x| * scale) with ties away from zero
  Integer scaled = (2 * num * scale + den) / (2 * den);
  Integer whole = scaled / scale;
  Integer frac = scaled % scale;
  std::string out = (negative && scaled != 0 ? "-" : "") + to_string(whole);
  if (digits > 0) {
    std::string f = to_string(frac);
    out += '.';
    out += std::string(digits - f.size(), '0');
    out += f;
  }
  return out;
}

Integer parse_integer(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty integer");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw Error(ErrorCode::ParseError, "malformed integer '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw Error(ErrorCode::ParseError, "malformed integer '" + text + "'");
  Integer v(text[0] == '+' ? text.substr(1) : text);
  return v;
}

}  // namespace butterfly
