#pragma once

#include "butterfly/integer.hpp"

#include <compare>
#include <ostream>
#include <string>
#include <vector>

namespace butterfly {

/// Reduced rational with positive denominator. Flux values are kept in
/// [0, 1]; the type itself admits any rational so that intermediate
/// differences can be represented.
class FareyFraction {
 public:
  FareyFraction() : num_(0), den_(1) {}
  /// Reduces and moves the sign to the numerator. Throws InvalidFraction on a
  /// zero denominator.
  FareyFraction(Integer num, Integer den);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool in_unit_interval() const { return num_ >= 0 && num_ <= den_; }
  Rational value() const { return Rational(num_, den_); }
  std::string str() const;

  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;
  friend std::strong_ordering operator<=>(const FareyFraction& a, const FareyFraction& b);
  friend std::ostream& operator<<(std::ostream& os, const FareyFraction& f) { return os << f.str(); }

 private:
  Integer num_;
  Integer den_;
};

/// Edges and center of a butterfly: left < mediant < right with
/// p_L q_R - p_R q_L = -1.
struct FriendlyTriplet {
  FareyFraction left;
  FareyFraction center;
  FareyFraction right;

  /// Builds the triplet from its edges. Throws NotFriendly unless the
  /// determinant is exactly -1.
  static FriendlyTriplet from_edges(const FareyFraction& left, const FareyFraction& right);

  friend bool operator==(const FriendlyTriplet&, const FriendlyTriplet&) = default;
};

/// p_L q_R - p_R q_L
Integer friendly_determinant(const FareyFraction& a, const FareyFraction& b);

FareyFraction mediant(const FareyFraction& a, const FareyFraction& b);

/// Farey neighbours in either order: |a.num b.den - b.num a.den| = 1.
bool is_friendly(const FareyFraction& a, const FareyFraction& b);

/// (b.num - a.num)/(b.den - a.den), with the sign folded into the numerator.
/// `negated` records that the raw denominator was negative; this is how a
/// left-running chain reports its accumulation point.
struct FareyDifference {
  FareyFraction value;
  bool negated = false;
};

FareyDifference farey_difference(const FareyFraction& a, const FareyFraction& b);

/// Every friendly triplet with center denominator <= q_max, found by
/// recursive mediant subdivision of [0/1, 1/1] in depth-first, left-first
/// order. Used as the ground truth for Farey structure.
std::vector<FriendlyTriplet> stern_brocot_friendly_triplets(const Integer& q_max);

/// Descends the Stern-Brocot tree to `target` (reduced, strictly inside
/// (0, 1)) and returns the triplet whose center it is.
FriendlyTriplet stern_brocot_parents(const FareyFraction& target);

}  // namespace butterfly
