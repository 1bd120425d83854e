#pragma once

#include "butterfly/generators.hpp"
#include "butterfly/integer.hpp"
#include "butterfly/matrix.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace butterfly {

using IntegerMatrix2 = SquareMatrix<Integer, 2>;

/// (t + sqrt(t^2 - 4)) / 2 for an integer trace t >= 3, the larger root of
/// x^2 - t x + 1. Stored exactly; `value()` is a derived floating view.
struct QuadraticSurd {
  Integer trace;
  Integer discriminant;  ///< t^2 - 4

  static QuadraticSurd from_trace(const Integer& trace);

  double value() const;
  /// Simplified closed form, e.g. "(3+sqrt(5))/2" or "3+2*sqrt(2)".
  std::string str() const;
  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// Product of the 2x2 blocks in application order: the first letter acts
/// first, so block(w) applied to the root's (1, 1) gives node_at(w)'s (q_R, q_L).
IntegerMatrix2 word_block(const Word& word);

Integer word_trace(const Word& word);

/// Dominant eigenvalue of word_block(word). A trace t <= -3 yields the
/// magnitude, i.e. the surd of |t|. Throws ParabolicWord for |t| = 2 and
/// EllipticWord for |t| < 2.
QuadraticSurd scaling_exponent(const Word& word);

/// t_k with t_0 = 2, t_1 = t, t_{k+1} = t t_k - t_{k-1}: trace of M^k.
Integer power_trace(const Integer& trace, std::size_t k);

/// (a_k, b_k) with lambda^k = (a_k + b_k sqrt(D)) / 2, computed by exact
/// multiplication in Z[sqrt(D)].
std::pair<Integer, Integer> surd_power_coefficients(const QuadraticSurd& s, std::size_t k);

struct ContinuedFraction {
  std::vector<Integer> terms;   ///< a_0, a_1, ... (as many as requested)
  std::size_t period_start = 0; ///< index of the first term of the repeating block
  std::vector<Integer> period;  ///< minimal repeating block

  std::string str() const;      ///< "[a0; a1, a2, ...]" with the period overlined as "(...)"
};

/// Exact expansion of the surd by the (P, Q) quadratic-irrational recurrence.
/// The period is found from the first repeated (P, Q) state.
ContinuedFraction cf_expansion(const QuadraticSurd& s, std::size_t terms);

}  // namespace butterfly
