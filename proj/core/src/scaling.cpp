#include "butterfly/scaling.hpp"

#include "butterfly/errors.hpp"

#include <cmath>
#include <map>

namespace butterfly {

QuadraticSurd QuadraticSurd::from_trace(const Integer& trace) {
  if (trace < 3) throw Error(ErrorCode::InvalidArgument, "surd trace must be at least 3");
  return {trace, trace * trace - 4};
}

double QuadraticSurd::value() const {
  const double t = trace.convert_to<double>();
  const double d = discriminant.convert_to<double>();
  return (t + std::sqrt(d)) / 2.0;
}

namespace {

/// D = outside^2 * inside with `inside` free of small square factors.
std::pair<Integer, Integer> split_square(Integer d) {
  Integer outside = 1;
  for (Integer p = 2; p * p <= d && p < 1000000; ++p) {
    while (d % (p * p) == 0) {
      d /= p * p;
      outside *= p;
    }
  }
  return {outside, d};
}

std::string coefficient_sqrt(const Integer& coeff, const Integer& inside) {
  std::string root = "sqrt(" + to_string(inside) + ")";
  return coeff == 1 ? root : to_string(coeff) + "*" + root;
}

}  // namespace

std::string QuadraticSurd::str() const {
  auto [outside, inside] = split_square(discriminant);
  if (trace % 2 == 0 && outside % 2 == 0)
    return to_string(Integer(trace / 2)) + "+" + coefficient_sqrt(outside / 2, inside);
  return "(" + to_string(trace) + "+" + coefficient_sqrt(outside, inside) + ")/2";
}

IntegerMatrix2 word_block(const Word& word) {
  if (word.empty()) throw Error(ErrorCode::InvalidArgument, "word must be nonempty");
  IntegerMatrix2 m = IntegerMatrix2::identity();
  for (auto k : word) m = canonical_matrices(k).two_by_two.cast<Integer>() * m;
  return m;
}

Integer word_trace(const Word& word) { return word_block(word).trace(); }

QuadraticSurd scaling_exponent(const Word& word) {
  Integer t = word_trace(word);
  Integer magnitude = t < 0 ? Integer(-t) : t;
  if (magnitude == 2)
    throw Error(ErrorCode::ParabolicWord,
                "'" + format_word(word) + "' has trace " + to_string(t) + ": growth is polynomial");
  if (magnitude < 2)
    throw Error(ErrorCode::EllipticWord,
                "'" + format_word(word) + "' has trace " + to_string(t) + ": finite order");
  return QuadraticSurd::from_trace(magnitude);
}

Integer power_trace(const Integer& trace, std::size_t k) {
  Integer prev = 2, cur = trace;
  if (k == 0) return prev;
  for (std::size_t i = 1; i < k; ++i) {
    Integer next = trace * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::pair<Integer, Integer> surd_power_coefficients(const QuadraticSurd& s, std::size_t k) {
  Integer a = 2, b = 0;  // lambda^0 = (2 + 0 sqrt D) / 2
  for (std::size_t i = 0; i < k; ++i) {
    // (a + b r)(t + r) / 4 with r^2 = D, halved twice back to the /2 form
    Integer na = a * s.trace + b * s.discriminant;
    Integer nb = a + b * s.trace;
    if (na % 2 != 0 || nb % 2 != 0)
      throw Error(ErrorCode::InvariantViolation, "surd power left Z[sqrt(D)]/2");
    a = na / 2;
    b = nb / 2;
  }
  return {a, b};
}

std::string ContinuedFraction::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 1) out += "; ";
    else if (i > 1) out += ", ";
    out += to_string(terms[i]);
  }
  out += ", ...] period (";
  for (std::size_t i = 0; i < period.size(); ++i) out += (i ? "," : "") + to_string(period[i]);
  return out + ")";
}

ContinuedFraction cf_expansion(const QuadraticSurd& s, std::size_t terms) {
  const Integer& d = s.discriminant;
  if (is_perfect_square(d)) throw Error(ErrorCode::InvalidArgument, "discriminant is a square");
  const Integer root = isqrt(d);
  Integer p = s.trace, q = 2;

  auto floor_of = [&](const Integer& pp, const Integer& qq) {
    // floor((pp + sqrt(d)) / qq) for irrational sqrt(d)
    if (qq > 0) return floor_div(pp + root, qq);
    return floor_div(-pp - root - 1, -qq);
  };

  ContinuedFraction out;
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  std::vector<Integer> all;
  bool period_found = false;
  for (std::size_t i = 0; !period_found || all.size() < terms; ++i) {
    if (!period_found) {
      auto [it, inserted] = seen.emplace(std::make_pair(p, q), i);
      if (!inserted) {
        out.period_start = it->second;
        out.period.assign(all.begin() + static_cast<std::ptrdiff_t>(it->second), all.end());
        period_found = true;
        if (all.size() >= terms) break;
      }
    }
    Integer a = floor_of(p, q);
    all.push_back(a);
    Integer next_p = a * q - p;
    Integer next_q = (d - next_p * next_p) / q;
    p = std::move(next_p);
    q = std::move(next_q);
  }
  // collapse a block made of repeats of a shorter one
  const std::size_t n = out.period.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool repeats = true;
    for (std::size_t i = len; i < n && repeats; ++i) repeats = out.period[i] == out.period[i - len];
    if (repeats) {
      out.period.resize(len);
      break;
    }
  }
  out.terms.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(std::min(terms, all.size())));
  return out;
}

}  // namespace butterfly
