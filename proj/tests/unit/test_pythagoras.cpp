#include "butterfly/errors.hpp"
#include "butterfly/pythagoras.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace butterfly;
using G = GeneratorKind;

namespace {
PythTriple T(long long a, long long b, long long c) { return {a, b, c}; }
}

TEST(Euclid, Branches) {
  EXPECT_EQ(euclid_to_triple({3, 1}), T(3, 4, 5));
  EXPECT_EQ(euclid_to_triple({2, 1}), T(4, 3, 5));
  EXPECT_EQ(euclid_to_triple({1, 3}), T(3, -4, 5));
  EXPECT_EQ(euclid_to_triple({5, 3}), T(15, 8, 17));
  EXPECT_THROW(euclid_to_triple({4, 2}), Error);
}

TEST(HMatrices, Examples) {
  EXPECT_EQ(apply_H(1, T(3, 4, 5)), T(5, 12, 13));
  EXPECT_EQ(apply_H(2, T(3, 4, 5)), T(21, 20, 29));
  EXPECT_EQ(apply_H(3, T(3, 4, 5)), T(15, 8, 17));
  EXPECT_EQ(apply_h(1, {3, 1}), (EuclidPair{5, 1}));
  EXPECT_EQ(apply_h(2, {3, 1}), (EuclidPair{7, 3}));
  EXPECT_EQ(apply_h(3, {3, 1}), (EuclidPair{5, 3}));
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(abs(h_matrix3(i).determinant()), 1);
}

TEST(HMatrices, Functoriality) {
  for (long long m = 1; m <= 200; ++m)
    for (long long n = 1; n <= 200; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const EuclidPair p{m, n};
      for (int i = 1; i <= 3; ++i)
        ASSERT_EQ(euclid_to_triple(apply_h(i, p)), apply_H(i, euclid_to_triple(p)))
            << "h" << i << " on (" << m << "," << n << ")";
    }
}

TEST(HMatrices, PreserveEquationAndParity) {
  std::mt19937 rng(17);
  PythTriple t = T(3, 4, 5);
  for (int step = 0; step < 60; ++step) {
    const int i = std::uniform_int_distribution<int>(1, 3)(rng);
    const PythTriple u = apply_H(i, t);
    EXPECT_TRUE(is_pythagorean(u));
    EXPECT_TRUE(is_primitive(u));
    EXPECT_EQ(u.a % 2 != 0, t.a % 2 != 0);
    EXPECT_EQ(u.b % 2 != 0, t.b % 2 != 0);
    EXPECT_GT(u.c, t.c);
    t = u;
  }
}

TEST(InducedMatrix, RecoversH) {
  // Same-parity pairs carry the H action exactly.
  for (int i = 1; i <= 3; ++i) {
    const auto t = induced_triple_matrix(h_matrix2(i));
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) EXPECT_EQ(t(r, c), Rational(h_matrix3(i)(r, c))) << i;
  }
}

TEST(Oracle, SmallBounds) {
  EXPECT_EQ(primitive_triple_oracle(5), (std::set<PythTriple>{T(3, 4, 5)}));
  const auto s17 = primitive_triple_oracle(17);
  EXPECT_EQ(s17, (std::set<PythTriple>{T(3, 4, 5), T(5, 12, 13), T(15, 8, 17)}));
  const auto brute = oracle::primitive_triples(300);
  const auto got = primitive_triple_oracle(300);
  ASSERT_EQ(got.size(), brute.size());
  for (const auto& t : got) EXPECT_TRUE(brute.contains({to_int64(t.a), to_int64(t.b), to_int64(t.c)}));
}

TEST(Tree, CoversPrimitiveTriplesOnce) {
  const auto nodes = pythagorean_tree(1000, Integer(1000));
  std::map<std::array<std::int64_t, 3>, int> seen;
  for (const auto& n : nodes) {
    const auto t = normalized(n.triple);
    ++seen[{to_int64(t.a), to_int64(t.b), to_int64(t.c)}];
  }
  const auto brute = oracle::primitive_triples(1000);
  EXPECT_EQ(brute.size(), 158u);
  EXPECT_EQ(seen.size(), brute.size());
  for (const auto& [t, count] : seen) {
    EXPECT_EQ(count, 1);
    EXPECT_TRUE(brute.contains(t));
  }
}

TEST(Tree, DepthLimits) {
  EXPECT_EQ(pythagorean_tree(0, std::nullopt).size(), 1u);
  EXPECT_EQ(pythagorean_tree(2, std::nullopt).size(), 13u);
  const auto one = pythagorean_tree(1, std::nullopt);
  EXPECT_EQ(one[1].word, std::vector<int>{1});
  EXPECT_EQ(one[1].triple, T(5, 12, 13));
}

TEST(CBranch, Substitution) {
  EXPECT_EQ(cbranch_to_triple(root()), T(1, 0, 1));
  EXPECT_EQ(cbranch_to_triple(node_at({G::CL})), T(3, 4, 5));
  EXPECT_EQ(cbranch_to_triple(node_at({G::CL, G::TR})), T(15, 8, 17));
  EXPECT_EQ(cbranch_to_triple(node_at({G::CR})), T(3, -4, 5));
  EXPECT_THROW(cbranch_to_triple(node_at({G::UL})), Error);
}

TEST(CBranch, ParityClassIsStableAlongCPaths) {
  std::mt19937 rng(23);
  const G letters[] = {G::CL, G::CR, G::TL};
  for (int i = 0; i < 200; ++i) {
    TreeNode n = node_at({letters[std::uniform_int_distribution<int>(0, 1)(rng)]});
    const bool both_odd = n.label.q_right % 2 == 1 && n.label.q_left % 2 == 1;
    const PythTriple first = cbranch_to_triple(n);
    for (int d = 0; d < 8; ++d) {
      G k = letters[std::uniform_int_distribution<int>(0, 2)(rng)];
      if (is_chain(k)) k = *tail_generator(n.tail_direction);
      n = make_child(n, k);
      EXPECT_EQ(n.label.q_right % 2 == 1 && n.label.q_left % 2 == 1, both_odd);
      const PythTriple t = cbranch_to_triple(n);
      EXPECT_TRUE(is_pythagorean(t));
      EXPECT_EQ(t.a % 2 != 0, first.a % 2 != 0);
      EXPECT_EQ(t.b % 2 != 0, first.b % 2 != 0);
      EXPECT_EQ(t.b < 0, n.tail_direction == TailDirection::Left);
    }
  }
}
