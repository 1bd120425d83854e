#include "butterfly/generators.hpp"

#include "butterfly/errors.hpp"

#include <sstream>

namespace butterfly {

std::string_view letter(GeneratorKind kind) noexcept {
  static constexpr std::array<std::string_view, 8> names{"CL", "CR", "UL", "UR",
                                                         "DL", "DR", "TL", "TR"};
  return names[index_of(kind)];
}

std::string_view symbol(GeneratorKind kind) noexcept {
  static constexpr std::array<std::string_view, 8> names{"C_L", "C_R", "U_L", "U_R",
                                                         "D_L", "D_R", "C_cL", "C_cR"};
  return names[index_of(kind)];
}

std::size_t index_of(GeneratorKind kind) noexcept { return static_cast<std::size_t>(kind); }

std::optional<GeneratorKind> parse_letter(std::string_view text) noexcept {
  for (auto k : kAllGenerators)
    if (letter(k) == text) return k;
  return std::nullopt;
}

std::optional<GeneratorKind> tail_generator(TailDirection d) noexcept {
  switch (d) {
    case TailDirection::Left: return GeneratorKind::TL;
    case TailDirection::Right: return GeneratorKind::TR;
    case TailDirection::None: break;
  }
  return std::nullopt;
}

Word parse_word(std::string_view text) {
  Word word;
  if (text.empty()) return word;
  std::size_t start = 0;
  for (;;) {
    std::size_t dot = text.find('.', start);
    std::string_view part = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
    auto k = parse_letter(part);
    if (!k)
      throw Error(ErrorCode::ParseError,
                  "unknown generator '" + std::string(part) + "' (expected CL CR UL UR DL DR TL TR)");
    word.push_back(*k);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return word;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '.';
    out += letter(word[i]);
  }
  return out;
}

namespace {

GeneratorMatrix make(GeneratorKind kind, IntMatrix<2> two, std::array<long long, 3> dsigma_row,
                     std::array<long long, 4> plus_row, std::array<long long, 4> minus_row) {
  GeneratorMatrix g{kind, two, {}, {}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      g.three_by_three(i, j) = two(i, j);
      g.four_by_four(i, j) = two(i, j);
    }
  g.three_by_three.rows[2] = dsigma_row;
  g.four_by_four.rows[2] = plus_row;
  g.four_by_four.rows[3] = minus_row;
  return g;
}

std::array<GeneratorMatrix, 8> build_table() {
  using M2 = IntMatrix<2>;
  const M2 c_l = M2::from_rows({{1, 2}, {0, 1}});
  const M2 c_r = M2::from_rows({{1, 0}, {2, 1}});
  const M2 left = M2::from_rows({{1, 1}, {1, 2}});
  const M2 right = M2::from_rows({{2, 1}, {1, 1}});
  const M2 t_l = M2::from_rows({{0, 1}, {-1, 2}});
  const M2 t_r = M2::from_rows({{2, -1}, {1, 0}});
  // Third rows of the 3x3s follow the dsigma recursion; rows 3-4 of the 4x4s
  // follow the (sigma_plus, sigma_minus) recursion.
  return {
      make(GeneratorKind::CL, c_l, {0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}),
      make(GeneratorKind::CR, c_r, {0, 0, 1}, {1, 0, 1, 0}, {1, 0, 0, 1}),
      make(GeneratorKind::UL, left, {-1, 0, 1}, {0, 1, 1, 0}, {1, 1, 0, 1}),
      make(GeneratorKind::UR, right, {0, 1, 1}, {1, 1, 1, 0}, {1, 0, 0, 1}),
      make(GeneratorKind::DL, left, {1, 0, 1}, {1, 1, 1, 0}, {0, 1, 0, 1}),
      make(GeneratorKind::DR, right, {0, -1, 1}, {1, 0, 1, 0}, {1, 1, 0, 1}),
      make(GeneratorKind::TL, t_l, {0, 0, 1}, {-1, 1, 1, 0}, {-1, 1, 0, 1}),
      make(GeneratorKind::TR, t_r, {0, 0, 1}, {1, -1, 1, 0}, {1, -1, 0, 1}),
  };
}

}  // namespace

const GeneratorMatrix& canonical_matrices(GeneratorKind kind) {
  static const std::array<GeneratorMatrix, 8> table = build_table();
  return table[index_of(kind)];
}

void require_tail_precondition(GeneratorKind kind, const Integer& q_right, const Integer& q_left,
                               std::size_t prefix_length) {
  if (kind == GeneratorKind::TL && !(q_left > q_right))
    throw TailDirectionMismatch(prefix_length, "C_cL needs q_L > q_R, got (q_R, q_L) = (" +
                                                   to_string(q_right) + ", " + to_string(q_left) +
                                                   ")");
  if (kind == GeneratorKind::TR && !(q_right > q_left))
    throw TailDirectionMismatch(prefix_length, "C_cR needs q_R > q_L, got (q_R, q_L) = (" +
                                                   to_string(q_right) + ", " + to_string(q_left) +
                                                   ")");
}

ButterflyLabel apply_label(GeneratorKind kind, const ButterflyLabel& label) {
  require_tail_precondition(kind, label.q_right, label.q_left);
  auto v = canonical_matrices(kind).three_by_three.apply(
      std::array<Integer, 3>{label.q_right, label.q_left, label.delta_sigma});
  ButterflyLabel out{v[0], v[1], v[2]};
  if (auto bad = out.violations(); !bad.empty())
    throw Error(ErrorCode::InvariantViolation, bad.front());
  return out;
}

ButterflyState apply_state(GeneratorKind kind, const ButterflyState& s) {
  require_tail_precondition(kind, s.right.den(), s.left.den());
  const Integer& pl = s.left.num();
  const Integer& ql = s.left.den();
  const Integer& pr = s.right.num();
  const Integer& qr = s.right.den();
  const Integer pc = pl + pr;
  const Integer qc = ql + qr;

  ButterflyState out = s;
  switch (kind) {
    case GeneratorKind::CL:
      out.right = FareyFraction(2 * pl + pr, 2 * ql + qr);
      out.sigma_plus += ql;
      out.sigma_minus += ql;
      break;
    case GeneratorKind::CR:
      out.left = FareyFraction(pl + 2 * pr, ql + 2 * qr);
      out.sigma_plus += qr;
      out.sigma_minus += qr;
      break;
    case GeneratorKind::UL:
    case GeneratorKind::DL:
      out.right = FareyFraction(pc, qc);
      out.left = FareyFraction(pl + pc, ql + qc);
      if (kind == GeneratorKind::UL) {
        out.sigma_plus += ql;
        out.sigma_minus += qc;
      } else {
        out.sigma_plus += qc;
        out.sigma_minus += ql;
      }
      break;
    case GeneratorKind::UR:
    case GeneratorKind::DR:
      out.left = FareyFraction(pc, qc);
      out.right = FareyFraction(pr + pc, qr + qc);
      if (kind == GeneratorKind::UR) {
        out.sigma_plus += qc;
        out.sigma_minus += qr;
      } else {
        out.sigma_plus += qr;
        out.sigma_minus += qc;
      }
      break;
    case GeneratorKind::TL:
      out.right = s.left;
      out.left = FareyFraction(2 * pl - pr, 2 * ql - qr);
      out.sigma_plus += ql - qr;
      out.sigma_minus += ql - qr;
      break;
    case GeneratorKind::TR:
      out.left = s.right;
      out.right = FareyFraction(2 * pr - pl, 2 * qr - ql);
      out.sigma_plus += qr - ql;
      out.sigma_minus += qr - ql;
      break;
  }
  return out;
}

ConsistencyReport representation_consistency(GeneratorKind kind, const ButterflyState& state) {
  ConsistencyReport report;
  std::ostringstream diff;
  ButterflyState next;
  try {
    next = apply_state(kind, state);
  } catch (const Error& e) {
    report.consistent = false;
    report.diff = e.what();
    return report;
  }
  const auto& g = canonical_matrices(kind);
  const std::array<Integer, 4> expected4{next.right.den(), next.left.den(), next.sigma_plus,
                                         next.sigma_minus};
  const auto got4 = g.four_by_four.apply(
      std::array<Integer, 4>{state.right.den(), state.left.den(), state.sigma_plus, state.sigma_minus});
  if (got4 != expected4)
    diff << "4x4 gives (" << got4[0] << "," << got4[1] << "," << got4[2] << "," << got4[3]
         << ") but state gives (" << expected4[0] << "," << expected4[1] << "," << expected4[2]
         << "," << expected4[3] << "); ";

  const std::array<Integer, 3> expected3{next.right.den(), next.left.den(), next.delta_sigma()};
  const auto got3 = g.three_by_three.apply(
      std::array<Integer, 3>{state.right.den(), state.left.den(), state.delta_sigma()});
  if (got3 != expected3)
    diff << "3x3 gives (" << got3[0] << "," << got3[1] << "," << got3[2] << ") but state gives ("
         << expected3[0] << "," << expected3[1] << "," << expected3[2] << "); ";

  const std::array<Integer, 2> expected_p{next.right.num(), next.left.num()};
  const auto got_p = g.two_by_two.apply(std::array<Integer, 2>{state.right.num(), state.left.num()});
  if (got_p != expected_p)
    diff << "2x2 on numerators gives (" << got_p[0] << "," << got_p[1] << ") but state gives ("
         << expected_p[0] << "," << expected_p[1] << "); ";

  report.diff = diff.str();
  report.consistent = report.diff.empty();
  return report;
}

}  // namespace butterfly
