#pragma once

#include "butterfly/farey.hpp"
#include "butterfly/integer.hpp"
#include "butterfly/state.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace butterfly {

/// Gap r at flux p/q: p*sigma + q*tau = r, with sigma in (-q/2, q/2].
struct GapLabel {
  std::int64_t r;
  std::int64_t sigma;
  std::int64_t tau;
  friend bool operator==(const GapLabel&, const GapLabel&) = default;
};

/// Band `index` (1..q): p*chern + q*m = 1.
struct BandLabel {
  std::int64_t index;
  std::int64_t chern;
  std::int64_t m;
  friend bool operator==(const BandLabel&, const BandLabel&) = default;
};

/// Canonical gap Chern number: sigma = r * p^{-1} (mod q) folded into (-q/2, q/2].
Integer canonical_gap_sigma(const Integer& p, const Integer& q, const Integer& r);

/// Gaps 1..q-1 of flux p/q. Requires gcd(p, q) = 1 and 0 <= p <= q.
std::vector<GapLabel> gap_labels(std::int64_t p, std::int64_t q);

/// Bands 1..q as consecutive differences of gap sigmas, sigma(0) = sigma(q) = 0.
std::vector<BandLabel> band_cherns(std::int64_t p, std::int64_t q);

/// Numerators (p_L, p_R) of the unique friendly pair p_L/q_L < p_R/q_R in
/// [0, 1] with p_L q_R - p_R q_L = -1.
std::pair<Integer, Integer> recover_edges(const Integer& q_right, const Integer& q_left);

/// sigma0 + n*q0: Chern numbers of the gaps accumulating at a flux with
/// denominator q0 whose parent gap carries sigma0.
Integer hierarchy_gap_chern(const Integer& sigma0, const Integer& q0, const Integer& n);
std::vector<Integer> hierarchy_gap_cherns(const Integer& sigma0, const Integer& q0,
                                          std::span<const std::int64_t> n_values);

/// Gap index at the crossing of a butterfly's two diagonals.
struct CenterGap {
  Integer r;
  FareyFraction density;
};

/// r_c in (0, q_c) with r_c = sigma_plus * p_c = -sigma_minus * p_c (mod q_c).
/// Throws InconsistentChernPair when the two congruences disagree.
CenterGap center_gap_index(const ButterflyState& state);

}  // namespace butterfly
