#pragma once

#include "butterfly/integer.hpp"
#include "butterfly/matrix.hpp"
#include "butterfly/pythagoras.hpp"
#include "butterfly/state.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace butterfly {

/// Curvatures of four mutually tangent circles.
struct DescartesQuadruple {
  std::array<Integer, 4> k;

  /// 2(k1^2 + k2^2 + k3^2 + k4^2) = (k1 + k2 + k3 + k4)^2
  bool satisfies_descartes() const;
  std::string str() const;
  friend bool operator==(const DescartesQuadruple&, const DescartesQuadruple&) = default;
};

/// A letter of the super-Apollonian group: S_i or its adjoint (transpose).
struct ApollonianLetter {
  int index = 1;  ///< 1..4
  bool adjoint = false;
  friend bool operator==(const ApollonianLetter&, const ApollonianLetter&) = default;
};

using ApollonianWord = std::vector<ApollonianLetter>;

/// "S1".."S4" for generators, "S1T".."S4T" for adjoints; dot-separated.
ApollonianWord parse_apollonian_word(std::string_view text);
std::string format_apollonian_word(const ApollonianWord& word);

const IntMatrix<4>& s_matrix(int i);
IntMatrix<4> adjoint_S(int i);

/// k_i -> 2(sum of the others) - k_i
DescartesQuadruple apply_S(int i, const DescartesQuadruple& q);
DescartesQuadruple apply_adjoint(int i, const DescartesQuadruple& q);
DescartesQuadruple apply_letter(const ApollonianLetter& l, const DescartesQuadruple& q);
/// Letters are applied left to right.
DescartesQuadruple apply_word(const ApollonianWord& w, const DescartesQuadruple& q);

/// Visits every quadruple reached by words of length <= depth over all eight
/// letters, including the seed. Returns the number of words visited.
std::size_t for_each_in_orbit(const DescartesQuadruple& seed, std::size_t depth, bool with_adjoints,
                              const std::function<void(const DescartesQuadruple&)>& visit);

/// (q_L^2, q_R^2, q_c^2, 0): the two edge Ford circles, the center Ford
/// circle, and the line.
DescartesQuadruple ford_quadruple(const ButterflyState& state);
/// Same quadruple from a Euclid pair (m, n) = (q_R, q_L).
DescartesQuadruple ford_quadruple(const EuclidPair& pair);

/// (a, b, c) -> (c - b, c + b, 2(c + a), 0)
DescartesQuadruple triple_to_quadruple(const PythTriple& t);

enum class CorrespondenceTarget { H1, H2, H3, UL, UR };

std::string_view to_string(CorrespondenceTarget t) noexcept;
std::optional<CorrespondenceTarget> parse_correspondence_target(std::string_view text) noexcept;
/// The 2x2 step on Euclid pairs (m, n) = (q_R, q_L) that the target performs.
const IntMatrix<2>& correspondence_step(CorrespondenceTarget t);

struct Convention {
  ApollonianWord word;                ///< applied left to right
  std::array<std::size_t, 4> permutation;  ///< word(F(p))[i] = F(step p)[permutation[i]]
  std::string describe() const;
};

struct CorrespondenceReport {
  CorrespondenceTarget target;
  std::vector<EuclidPair> samples;
  std::vector<Convention> conventions;
};

/// Exhaustive search over super-Apollonian words of length <= max_length and
/// the 24 coordinate permutations for conventions under which the word acting
/// on Ford quadruples intertwines the target's step on Euclid pairs, over a
/// fixed sample of coprime pairs m > n >= 1.
CorrespondenceReport correspondence_search(CorrespondenceTarget target, std::size_t max_length = 3);

}  // namespace butterfly
