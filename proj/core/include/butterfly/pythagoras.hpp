#pragma once

#include "butterfly/integer.hpp"
#include "butterfly/matrix.hpp"
#include "butterfly/tree.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <set>
#include <vector>

namespace butterfly {

struct EuclidPair {
  Integer m;
  Integer n;
  friend bool operator==(const EuclidPair&, const EuclidPair&) = default;
};

/// a^2 + b^2 = c^2; b is negative when the Euclid pair has m < n.
struct PythTriple {
  Integer a;
  Integer b;
  Integer c;
  friend bool operator==(const PythTriple&, const PythTriple&) = default;
  friend std::strong_ordering operator<=>(const PythTriple& x, const PythTriple& y);
  friend std::ostream& operator<<(std::ostream& os, const PythTriple& t);
};

bool is_pythagorean(const PythTriple& t);
bool is_primitive(const PythTriple& t);

/// Orients a positive triple as (odd leg, even leg, hypotenuse), which is the
/// orientation the H-tree produces from (3, 4, 5).
PythTriple normalized(const PythTriple& t);

/// Euclid's recipe: same parity -> (mn, (m^2-n^2)/2, (m^2+n^2)/2),
/// opposite parity -> (2mn, m^2-n^2, m^2+n^2). Throws NotCoprime.
PythTriple euclid_to_triple(const EuclidPair& pair);

/// H_1, H_2, H_3 acting on (a, b, c); `i` in 1..3.
const IntMatrix<3>& h_matrix3(int i);
/// h_1, h_2, h_3 acting on (m, n).
const IntMatrix<2>& h_matrix2(int i);

PythTriple apply_H(int i, const PythTriple& t);
EuclidPair apply_h(int i, const EuclidPair& pair);

/// The 3x3 map T with euclid_to_triple(A p) = T euclid_to_triple(p) for every
/// pair p of a fixed parity class. Entries are rational in general.
SquareMatrix<Rational, 3> induced_triple_matrix(const IntMatrix<2>& a);

/// Brute-force scan of all primitive triples with positive legs and
/// c <= c_max, normalized.
std::set<PythTriple> primitive_triple_oracle(const Integer& c_max);

struct PythNode {
  std::vector<int> word;  ///< H indices applied from (3, 4, 5)
  PythTriple triple;
};

/// Breadth-first H-tree from (3, 4, 5), stopping at `max_depth` and, when
/// given, at hypotenuses above `c_max` (c grows strictly along every branch).
std::vector<PythNode> pythagorean_tree(std::size_t max_depth, const std::optional<Integer>& c_max);

/// Euclid triple of a C-cell, chain, or root node, using (q_R, q_L) as (m, n).
/// Throws NotCCell for E-cell nodes; the root maps to the degenerate (1, 0, 1).
PythTriple cbranch_to_triple(const TreeNode& node);

}  // namespace butterfly
