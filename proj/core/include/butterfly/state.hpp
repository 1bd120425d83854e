#pragma once

#include "butterfly/farey.hpp"
#include "butterfly/integer.hpp"

#include <compare>
#include <ostream>
#include <string>
#include <vector>

namespace butterfly {

/// The three integers (q_R, q_L, delta_sigma) that identify a butterfly.
struct ButterflyLabel {
  Integer q_right;
  Integer q_left;
  Integer delta_sigma;

  /// Empty when q_R, q_L >= 1, coprime, and distinct unless (1,1,0).
  std::vector<std::string> violations() const;

  friend bool operator==(const ButterflyLabel&, const ButterflyLabel&) = default;
  friend std::strong_ordering operator<=>(const ButterflyLabel& a, const ButterflyLabel& b);
  friend std::ostream& operator<<(std::ostream& os, const ButterflyLabel& l);
};

enum class TailDirection { None, Left, Right };

std::string_view to_string(TailDirection d) noexcept;

/// Right iff q_R > q_L, left iff q_L > q_R.
TailDirection tail_direction_of(const Integer& q_right, const Integer& q_left);

/// Full record of one butterfly: flux edges and the Chern numbers of its two
/// major gaps, written (sigma_plus, -sigma_minus) with both positive.
struct ButterflyState {
  FareyFraction left;
  FareyFraction right;
  Integer sigma_plus;
  Integer sigma_minus;

  FareyFraction center() const { return mediant(left, right); }
  Integer q_center() const { return left.den() + right.den(); }
  Integer p_center() const { return left.num() + right.num(); }
  Integer delta_sigma() const { return sigma_plus - sigma_minus; }
  ButterflyLabel label() const { return {right.den(), left.den(), delta_sigma()}; }
  TailDirection tail_direction() const { return tail_direction_of(right.den(), left.den()); }
  FriendlyTriplet triplet() const { return FriendlyTriplet{left, center(), right}; }

  /// Empty when edges are friendly in [0,1] with determinant -1, both sigmas
  /// are positive, and sigma_plus + sigma_minus = q_L + q_R.
  std::vector<std::string> violations() const;

  friend bool operator==(const ButterflyState&, const ButterflyState&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ButterflyState& s);
};

/// The main butterfly: [0/1, 1/2, 1/1] with Chern pair (1, 1).
ButterflyState main_butterfly();

}  // namespace butterfly
