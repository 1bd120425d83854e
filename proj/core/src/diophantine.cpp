#include "butterfly/diophantine.hpp"

#include "butterfly/errors.hpp"

#include <numeric>

namespace butterfly {
namespace {

void require_coprime_flux(std::int64_t p, std::int64_t q) {
  if (q < 1 || p < 0 || p > q)
    throw Error(ErrorCode::InvalidArgument,
                "flux " + std::to_string(p) + "/" + std::to_string(q) + " outside [0, 1]");
  if (std::gcd(p, q) != 1)
    throw Error(ErrorCode::NotCoprime, std::to_string(p) + "/" + std::to_string(q));
}

}  // namespace

Integer canonical_gap_sigma(const Integer& p, const Integer& q, const Integer& r) {
  Integer s = floor_mod(r * mod_inverse(p, q), q);
  if (2 * s > q) s -= q;
  return s;
}

std::vector<GapLabel> gap_labels(std::int64_t p, std::int64_t q) {
  require_coprime_flux(p, q);
  std::vector<GapLabel> out;
  out.reserve(q > 1 ? static_cast<std::size_t>(q - 1) : 0);
  for (std::int64_t r = 1; r < q; ++r) {
    std::int64_t sigma = to_int64(canonical_gap_sigma(p, q, r));
    std::int64_t tau = (r - p * sigma) / q;
    out.push_back({r, sigma, tau});
  }
  return out;
}

std::vector<BandLabel> band_cherns(std::int64_t p, std::int64_t q) {
  auto gaps = gap_labels(p, q);
  std::vector<BandLabel> out;
  out.reserve(static_cast<std::size_t>(q));
  std::int64_t previous = 0;
  for (std::int64_t index = 1; index <= q; ++index) {
    std::int64_t current = index < q ? gaps[static_cast<std::size_t>(index - 1)].sigma : 0;
    std::int64_t chern = current - previous;
    std::int64_t rest = 1 - p * chern;
    if (rest % q != 0)
      throw Error(ErrorCode::InvariantViolation,
                  "band " + std::to_string(index) + " violates p N + q M = 1");
    out.push_back({index, chern, rest / q});
    previous = current;
  }
  return out;
}

std::pair<Integer, Integer> recover_edges(const Integer& q_right, const Integer& q_left) {
  if (q_right < 1 || q_left < 1)
    throw Error(ErrorCode::InvalidArgument, "denominators must be positive");
  if (gcd(q_right, q_left) != 1)
    throw Error(ErrorCode::NotCoprime, "(" + to_string(q_right) + ", " + to_string(q_left) + ")");
  if (q_left == 1) return {0, 1};  // only 0/1 sits left of a neighbor with q_L = 1
  // p_L q_R = -1 (mod q_L)
  Integer p_left = floor_mod(-mod_inverse(q_right, q_left), q_left);
  Integer p_right = (p_left * q_right + 1) / q_left;
  return {p_left, p_right};
}

Integer hierarchy_gap_chern(const Integer& sigma0, const Integer& q0, const Integer& n) {
  if (q0 < 1) throw Error(ErrorCode::InvalidArgument, "q0 must be positive");
  return sigma0 + n * q0;
}

std::vector<Integer> hierarchy_gap_cherns(const Integer& sigma0, const Integer& q0,
                                          std::span<const std::int64_t> n_values) {
  std::vector<Integer> out;
  out.reserve(n_values.size());
  for (auto n : n_values) out.push_back(hierarchy_gap_chern(sigma0, q0, n));
  return out;
}

CenterGap center_gap_index(const ButterflyState& state) {
  const Integer qc = state.q_center();
  const Integer pc = state.p_center();
  Integer from_plus = floor_mod(state.sigma_plus * pc, qc);
  Integer from_minus = floor_mod(-state.sigma_minus * pc, qc);
  if (from_plus != from_minus || from_plus == 0)
    throw Error(ErrorCode::InconsistentChernPair,
                "sigma_plus gives r = " + to_string(from_plus) + ", sigma_minus gives r = " +
                    to_string(from_minus) + " at q_c = " + to_string(qc));
  return {from_plus, FareyFraction(from_plus, qc)};
}

}  // namespace butterfly
