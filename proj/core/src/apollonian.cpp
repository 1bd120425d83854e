#include "butterfly/apollonian.hpp"

#include "butterfly/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace butterfly {

bool DescartesQuadruple::satisfies_descartes() const {
  Integer sum = 0, squares = 0;
  for (const auto& x : k) {
    sum += x;
    squares += x * x;
  }
  return 2 * squares == sum * sum;
}

std::string DescartesQuadruple::str() const {
  return "(" + to_string(k[0]) + "," + to_string(k[1]) + "," + to_string(k[2]) + "," +
         to_string(k[3]) + ")";
}

ApollonianWord parse_apollonian_word(std::string_view text) {
  ApollonianWord word;
  if (text.empty()) return word;
  std::size_t start = 0;
  for (;;) {
    std::size_t dot = text.find('.', start);
    std::string_view part = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
    bool ok = (part.size() == 2 || (part.size() == 3 && part[2] == 'T')) && part[0] == 'S' &&
              part[1] >= '1' && part[1] <= '4';
    if (!ok)
      throw Error(ErrorCode::ParseError,
                  "unknown Apollonian letter '" + std::string(part) + "' (expected S1..S4 or S1T..S4T)");
    word.push_back({part[1] - '0', part.size() == 3});
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return word;
}

std::string format_apollonian_word(const ApollonianWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '.';
    out += 'S';
    out += static_cast<char>('0' + word[i].index);
    if (word[i].adjoint) out += 'T';
  }
  return out;
}

const IntMatrix<4>& s_matrix(int i) {
  static const std::array<IntMatrix<4>, 4> table = [] {
    std::array<IntMatrix<4>, 4> t;
    for (std::size_t g = 0; g < 4; ++g) {
      t[g] = IntMatrix<4>::identity();
      for (std::size_t j = 0; j < 4; ++j) t[g](g, j) = (j == g) ? -1 : 2;
    }
    return t;
  }();
  if (i < 1 || i > 4) throw Error(ErrorCode::InvalidArgument, "S index must be in 1..4");
  return table[static_cast<std::size_t>(i - 1)];
}

IntMatrix<4> adjoint_S(int i) { return s_matrix(i).transpose(); }

DescartesQuadruple apply_S(int i, const DescartesQuadruple& q) {
  return {s_matrix(i).apply(q.k)};
}

DescartesQuadruple apply_adjoint(int i, const DescartesQuadruple& q) {
  return {adjoint_S(i).apply(q.k)};
}

DescartesQuadruple apply_letter(const ApollonianLetter& l, const DescartesQuadruple& q) {
  return l.adjoint ? apply_adjoint(l.index, q) : apply_S(l.index, q);
}

DescartesQuadruple apply_word(const ApollonianWord& w, const DescartesQuadruple& q) {
  DescartesQuadruple out = q;
  for (const auto& l : w) out = apply_letter(l, out);
  return out;
}

std::size_t for_each_in_orbit(const DescartesQuadruple& seed, std::size_t depth, bool with_adjoints,
                              const std::function<void(const DescartesQuadruple&)>& visit) {
  std::vector<ApollonianLetter> letters;
  for (int i = 1; i <= 4; ++i) letters.push_back({i, false});
  if (with_adjoints)
    for (int i = 1; i <= 4; ++i) letters.push_back({i, true});

  std::size_t visited = 0;
  std::vector<DescartesQuadruple> level{seed};
  visit(seed);
  ++visited;
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<DescartesQuadruple> next;
    next.reserve(level.size() * letters.size());
    for (const auto& q : level)
      for (const auto& l : letters) {
        next.push_back(apply_letter(l, q));
        visit(next.back());
        ++visited;
      }
    level = std::move(next);
  }
  return visited;
}

DescartesQuadruple ford_quadruple(const ButterflyState& state) {
  const Integer& ql = state.left.den();
  const Integer& qr = state.right.den();
  const Integer qc = ql + qr;
  return {{ql * ql, qr * qr, qc * qc, 0}};
}

DescartesQuadruple ford_quadruple(const EuclidPair& pair) {
  const Integer s = pair.m + pair.n;
  return {{pair.n * pair.n, pair.m * pair.m, s * s, 0}};
}

DescartesQuadruple triple_to_quadruple(const PythTriple& t) {
  return {{t.c - t.b, t.c + t.b, 2 * (t.c + t.a), 0}};
}

std::string_view to_string(CorrespondenceTarget t) noexcept {
  switch (t) {
    case CorrespondenceTarget::H1: return "H1";
    case CorrespondenceTarget::H2: return "H2";
    case CorrespondenceTarget::H3: return "H3";
    case CorrespondenceTarget::UL: return "UL";
    case CorrespondenceTarget::UR: return "UR";
  }
  return "H1";
}

std::optional<CorrespondenceTarget> parse_correspondence_target(std::string_view text) noexcept {
  for (auto t : {CorrespondenceTarget::H1, CorrespondenceTarget::H2, CorrespondenceTarget::H3,
                 CorrespondenceTarget::UL, CorrespondenceTarget::UR})
    if (std::ranges::equal(to_string(t), text, [](char a, char b) {
          return std::tolower(static_cast<unsigned char>(a)) ==
                 std::tolower(static_cast<unsigned char>(b));
        }))
      return t;
  return std::nullopt;
}

const IntMatrix<2>& correspondence_step(CorrespondenceTarget t) {
  static const IntMatrix<2> ul = IntMatrix<2>::from_rows({{1, 1}, {1, 2}});
  static const IntMatrix<2> ur = IntMatrix<2>::from_rows({{2, 1}, {1, 1}});
  switch (t) {
    case CorrespondenceTarget::H1: return h_matrix2(1);
    case CorrespondenceTarget::H2: return h_matrix2(2);
    case CorrespondenceTarget::H3: return h_matrix2(3);
    case CorrespondenceTarget::UL: return ul;
    case CorrespondenceTarget::UR: return ur;
  }
  return ul;
}

std::string Convention::describe() const {
  // As a matrix product the rightmost factor acts first.
  std::string product;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    product += 'S';
    product += static_cast<char>('0' + it->index);
    if (it->adjoint) product += "^T";
  }
  if (product.empty()) product = "1";
  std::string perm;
  for (std::size_t i = 0; i < 4; ++i) perm += (i ? "," : "") + std::to_string(permutation[i] + 1);
  return "apply " + (word.empty() ? std::string("nothing") : format_apollonian_word(word)) +
         " (product " + product + "), output slot i holds target slot (" + perm + ")[i]";
}

CorrespondenceReport correspondence_search(CorrespondenceTarget target, std::size_t max_length) {
  CorrespondenceReport report{target, {}, {}};
  for (long long m = 2; m <= 7; ++m)
    for (long long n = 1; n < m; ++n)
      if (std::gcd(m, n) == 1) report.samples.push_back({m, n});

  const auto& step = correspondence_step(target);
  std::vector<DescartesQuadruple> sources, targets;
  for (const auto& p : report.samples) {
    sources.push_back(ford_quadruple(p));
    auto v = step.apply(std::array<Integer, 2>{p.m, p.n});
    targets.push_back(ford_quadruple(EuclidPair{v[0], v[1]}));
  }

  std::vector<std::array<std::size_t, 4>> permutations;
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  do permutations.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<ApollonianLetter> letters;
  for (int i = 1; i <= 4; ++i) letters.push_back({i, false});
  for (int i = 1; i <= 4; ++i) letters.push_back({i, true});

  // Enumerate words by length, then lexicographically in letter order.
  std::vector<ApollonianWord> frontier{{}};
  for (std::size_t len = 0; len <= max_length; ++len) {
    for (const auto& word : frontier) {
      std::vector<DescartesQuadruple> images;
      images.reserve(sources.size());
      for (const auto& s : sources) images.push_back(apply_word(word, s));
      for (const auto& p : permutations) {
        bool ok = true;
        for (std::size_t s = 0; s < images.size() && ok; ++s)
          for (std::size_t i = 0; i < 4 && ok; ++i) ok = images[s].k[i] == targets[s].k[p[i]];
        if (ok) report.conventions.push_back({word, p});
      }
    }
    if (len == max_length) break;
    std::vector<ApollonianWord> next;
    next.reserve(frontier.size() * letters.size());
    for (const auto& word : frontier)
      for (const auto& l : letters) {
        ApollonianWord w = word;
        w.push_back(l);
        next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return report;
}

}  // namespace butterfly
