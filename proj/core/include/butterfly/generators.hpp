#pragma once

#include "butterfly/matrix.hpp"
#include "butterfly/state.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace butterfly {

/// The eight butterfly generators. TL and TR are the chain ("tail")
/// generators usually written C_cL and C_cR: TL extends a chain leftward and
/// needs q_L > q_R, TR extends it rightward and needs q_R > q_L.
enum class GeneratorKind : std::uint8_t { CL, CR, UL, UR, DL, DR, TL, TR };

inline constexpr std::array<GeneratorKind, 8> kAllGenerators{
    GeneratorKind::CL, GeneratorKind::CR, GeneratorKind::UL, GeneratorKind::UR,
    GeneratorKind::DL, GeneratorKind::DR, GeneratorKind::TL, GeneratorKind::TR};

/// Generators of the sextuplet, in canonical child order.
inline constexpr std::array<GeneratorKind, 6> kBabyGenerators{
    GeneratorKind::CL, GeneratorKind::CR, GeneratorKind::UL,
    GeneratorKind::UR, GeneratorKind::DL, GeneratorKind::DR};

/// Two-letter code used in word syntax: CL CR UL UR DL DR TL TR.
std::string_view letter(GeneratorKind kind) noexcept;
/// Conventional symbol: C_L ... D_R, C_cL, C_cR.
std::string_view symbol(GeneratorKind kind) noexcept;
std::optional<GeneratorKind> parse_letter(std::string_view text) noexcept;
std::size_t index_of(GeneratorKind kind) noexcept;

inline bool is_chain(GeneratorKind k) { return k == GeneratorKind::TL || k == GeneratorKind::TR; }
inline bool is_central(GeneratorKind k) { return k == GeneratorKind::CL || k == GeneratorKind::CR; }
inline bool is_edge(GeneratorKind k) { return !is_chain(k) && !is_central(k); }

/// The chain generator that continues a tail pointing in `d`.
std::optional<GeneratorKind> tail_generator(TailDirection d) noexcept;

using Word = std::vector<GeneratorKind>;

/// Dot-separated letters, e.g. "UL.UL"; the empty string is the empty word.
Word parse_word(std::string_view text);
std::string format_word(const Word& word);

/// One generator in its three integer representations:
///   2x2 on (q_R, q_L), 3x3 on (q_R, q_L, dsigma), 4x4 on (q_R, q_L, s+, s-).
struct GeneratorMatrix {
  GeneratorKind kind;
  IntMatrix<2> two_by_two;
  IntMatrix<3> three_by_three;
  IntMatrix<4> four_by_four;
};

const GeneratorMatrix& canonical_matrices(GeneratorKind kind);

/// Throws TailDirectionMismatch when `kind` is a chain letter whose
/// precondition fails on (q_R, q_L).
void require_tail_precondition(GeneratorKind kind, const Integer& q_right, const Integer& q_left,
                               std::size_t prefix_length = 0);

ButterflyLabel apply_label(GeneratorKind kind, const ButterflyLabel& label);
ButterflyState apply_state(GeneratorKind kind, const ButterflyState& state);

struct ConsistencyReport {
  bool consistent = true;
  std::string diff;
  explicit operator bool() const { return consistent; }
};

/// Compares apply_state against the 4x4 action on (q_R, q_L, s+, s-), the
/// 3x3 action on (q_R, q_L, dsigma), and the 2x2 action on (p_R, p_L).
ConsistencyReport representation_consistency(GeneratorKind kind, const ButterflyState& state);

}  // namespace butterfly
