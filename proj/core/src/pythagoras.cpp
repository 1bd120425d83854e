#include "butterfly/pythagoras.hpp"

#include "butterfly/errors.hpp"

#include <deque>

namespace butterfly {

std::strong_ordering operator<=>(const PythTriple& x, const PythTriple& y) {
  auto cmp = [](const Integer& p, const Integer& q) {
    return p < q ? std::strong_ordering::less
                 : (p > q ? std::strong_ordering::greater : std::strong_ordering::equal);
  };
  if (auto c = cmp(x.c, y.c); c != 0) return c;
  if (auto c = cmp(x.a, y.a); c != 0) return c;
  return cmp(x.b, y.b);
}

std::ostream& operator<<(std::ostream& os, const PythTriple& t) {
  return os << '(' << t.a << ',' << t.b << ',' << t.c << ')';
}

bool is_pythagorean(const PythTriple& t) { return t.a * t.a + t.b * t.b == t.c * t.c; }

bool is_primitive(const PythTriple& t) { return gcd(gcd(t.a, t.b), t.c) == 1; }

PythTriple normalized(const PythTriple& t) {
  Integer a = abs(t.a), b = abs(t.b);
  if (a % 2 == 0) std::swap(a, b);
  return {a, b, t.c};
}

PythTriple euclid_to_triple(const EuclidPair& p) {
  if (gcd(p.m, p.n) != 1)
    throw Error(ErrorCode::NotCoprime, "(" + to_string(p.m) + ", " + to_string(p.n) + ")");
  const Integer mm = p.m * p.m, nn = p.n * p.n, mn = p.m * p.n;
  if ((p.m - p.n) % 2 == 0) return {mn, (mm - nn) / 2, (mm + nn) / 2};
  return {2 * mn, mm - nn, mm + nn};
}

const IntMatrix<3>& h_matrix3(int i) {
  static const std::array<IntMatrix<3>, 3> table{
      IntMatrix<3>::from_rows({{1, -2, 2}, {2, -1, 2}, {2, -2, 3}}),
      IntMatrix<3>::from_rows({{1, 2, 2}, {2, 1, 2}, {2, 2, 3}}),
      IntMatrix<3>::from_rows({{-1, 2, 2}, {-2, 1, 2}, {-2, 2, 3}}),
  };
  if (i < 1 || i > 3) throw Error(ErrorCode::InvalidArgument, "H index must be 1, 2 or 3");
  return table[static_cast<std::size_t>(i - 1)];
}

const IntMatrix<2>& h_matrix2(int i) {
  static const std::array<IntMatrix<2>, 3> table{
      IntMatrix<2>::from_rows({{1, 2}, {0, 1}}),
      IntMatrix<2>::from_rows({{2, 1}, {1, 0}}),
      IntMatrix<2>::from_rows({{2, -1}, {1, 0}}),
  };
  if (i < 1 || i > 3) throw Error(ErrorCode::InvalidArgument, "h index must be 1, 2 or 3");
  return table[static_cast<std::size_t>(i - 1)];
}

PythTriple apply_H(int i, const PythTriple& t) {
  auto v = h_matrix3(i).apply(std::array<Integer, 3>{t.a, t.b, t.c});
  return {v[0], v[1], v[2]};
}

EuclidPair apply_h(int i, const EuclidPair& p) {
  auto v = h_matrix2(i).apply(std::array<Integer, 2>{p.m, p.n});
  return {v[0], v[1]};
}

SquareMatrix<Rational, 3> induced_triple_matrix(const IntMatrix<2>& a) {
  using RM = SquareMatrix<Rational, 3>;
  const Rational x = a(0, 0), y = a(0, 1), z = a(1, 0), w = a(1, 1);
  // Action on the symmetric square (m^2, mn, n^2).
  RM sym = RM::from_rows({{x * x, 2 * x * y, y * y},
                          {x * z, x * w + y * z, y * w},
                          {z * z, 2 * z * w, w * w}});
  const Rational half(1, 2);
  // triple = to_triple * (m^2, mn, n^2), up to the branch factor 2
  RM to_triple = RM::from_rows({{0, 1, 0}, {half, 0, -half}, {half, 0, half}});
  RM from_triple = RM::from_rows({{0, 1, 1}, {1, 0, 0}, {0, -1, 1}});
  return to_triple * sym * from_triple;
}

std::set<PythTriple> primitive_triple_oracle(const Integer& c_max) {
  if (c_max < 5) throw Error(ErrorCode::InvalidArgument, "c_max must be at least 5");
  std::set<PythTriple> out;
  for (Integer c = 5; c <= c_max; ++c) {
    const Integer cc = c * c;
    for (Integer a = 1; 2 * a * a < cc; ++a) {
      Integer rest = cc - a * a;
      Integer b = isqrt(rest);
      if (b * b != rest) continue;
      PythTriple t{a, b, c};
      if (is_primitive(t)) out.insert(normalized(t));
    }
  }
  return out;
}

std::vector<PythNode> pythagorean_tree(std::size_t max_depth, const std::optional<Integer>& c_max) {
  std::vector<PythNode> out;
  PythNode seed{{}, {3, 4, 5}};
  if (c_max && seed.triple.c > *c_max) return out;
  std::deque<PythNode> queue{seed};
  while (!queue.empty()) {
    PythNode node = std::move(queue.front());
    queue.pop_front();
    if (node.word.size() < max_depth) {
      for (int i = 1; i <= 3; ++i) {
        PythNode child{node.word, apply_H(i, node.triple)};
        child.word.push_back(i);
        if (!c_max || child.triple.c <= *c_max) queue.push_back(std::move(child));
      }
    }
    out.push_back(std::move(node));
  }
  return out;
}

PythTriple cbranch_to_triple(const TreeNode& node) {
  if (node.cell_class == CellClass::Edge)
    throw Error(ErrorCode::NotCCell, "'" + format_word(node.word) +
                                         "' is an E-cell butterfly; its parity is not conserved");
  return euclid_to_triple({node.label.q_right, node.label.q_left});
}

}  // namespace butterfly
