#include "butterfly/errors.hpp"
#include "butterfly/skeleton.hpp"

#include <gtest/gtest.h>

#include <regex>
#include <set>

using namespace butterfly;
using G = GeneratorKind;

namespace {

Rational R(long long a, long long b = 1) { return Rational(a, b); }

// Parses "x0=.. sx=.. y0=.. sy=.." from the metadata element.
std::array<long long, 4> transform_of(const std::string& svg) {
  std::smatch m;
  const std::regex re("x0=(-?\\d+) sx=(-?\\d+) y0=(-?\\d+) sy=(-?\\d+)");
  EXPECT_TRUE(std::regex_search(svg, m, re));
  return {std::stoll(m[1]), std::stoll(m[2]), std::stoll(m[3]), std::stoll(m[4])};
}

}  // namespace

TEST(Cell, RootGeometry) {
  const auto c = cell_geometry(root());
  EXPECT_EQ(c.phi_center, FareyFraction(1, 2));
  EXPECT_EQ(c.rho_center, R(1, 2));
  EXPECT_EQ(c.slope_plus, 1);
  EXPECT_EQ(c.slope_minus, -1);
  EXPECT_EQ(c.plus_at_left, R(0));
  EXPECT_EQ(c.plus_at_right, R(1));
  EXPECT_EQ(c.minus_at_left, R(1));
  EXPECT_EQ(c.minus_at_right, R(0));
  EXPECT_FALSE(c.color_index().has_value());
}

TEST(Cell, BabyGeometry) {
  const auto ul = cell_geometry(node_at({G::UL}));
  EXPECT_EQ(ul.phi_center, FareyFraction(2, 5));
  EXPECT_EQ(ul.rho_center, R(4, 5));
  EXPECT_EQ(ul.slope_plus, 2);
  EXPECT_EQ(ul.slope_minus, -3);
  EXPECT_EQ(ul.color_index(), 2u);

  const auto cr = cell_geometry(node_at({G::CR}));
  EXPECT_EQ(cr.phi_center, FareyFraction(3, 4));
  EXPECT_EQ(cr.rho_center, R(1, 2));
  EXPECT_EQ(cr.slope_plus, 2);
  EXPECT_EQ(cr.slope_minus, -2);
}

TEST(Cell, Invariants) {
  for (const auto& n : expand_all({3, std::nullopt, 2})) {
    const auto c = cell_geometry(n);
    const auto& s = n.state;
    EXPECT_EQ(c.phi_center, mediant(s.left, s.right));
    EXPECT_EQ(c.slope_plus, s.sigma_plus);
    EXPECT_EQ(c.slope_minus, -s.sigma_minus);
    // both diagonals pass through the center
    const Rational pc = c.phi_center.value();
    const Rational dl = pc - s.left.value(), dr = s.right.value() - pc;
    EXPECT_EQ(c.plus_at_left + Rational(c.slope_plus) * dl, c.rho_center);
    EXPECT_EQ(c.plus_at_right - Rational(c.slope_plus) * dr, c.rho_center);
    EXPECT_EQ(c.minus_at_left + Rational(c.slope_minus) * dl, c.rho_center);
    EXPECT_EQ(c.minus_at_right - Rational(c.slope_minus) * dr, c.rho_center);
    // exact corners with denominators dividing q_edge * q_c
    const Integer qc = s.q_center();
    for (const auto& [v, q] : {std::pair{c.plus_at_left, s.left.den()}, {c.minus_at_left, s.left.den()},
                               {c.plus_at_right, s.right.den()}, {c.minus_at_right, s.right.den()}})
      EXPECT_EQ((q * qc) % denominator(v), 0) << format_word(n.word);
    const auto k = c.corners();
    EXPECT_LE(k[0].rho, k[1].rho);
    EXPECT_LE(k[3].rho, k[2].rho);
  }
}

TEST(Cell, SiblingsDoNotOverlap) {
  for (const auto& parent : expand_all({2, std::nullopt, 0})) {
    std::vector<std::pair<FareyFraction, FareyFraction>> spans;
    for (const auto& kid : children(parent)) spans.emplace_back(kid.state.left, kid.state.right);
    // siblings at the same flux window coincide; distinct windows must be disjoint
    std::set<std::pair<FareyFraction, FareyFraction>> distinct(spans.begin(), spans.end());
    std::vector<std::pair<FareyFraction, FareyFraction>> list(distinct.begin(), distinct.end());
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        EXPECT_TRUE(list[i].second <= list[j].first || list[j].second <= list[i].first);
  }
}

TEST(Tail, TriangleReachesAccumulationPoint) {
  const auto t = tail_triangle(node_at({G::CL}));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->apex.phi, R(1, 2));
  EXPECT_EQ(t->base_low.phi, R(1, 3));
  EXPECT_EQ(t->base_high.phi, R(1, 3));
  EXPECT_FALSE(tail_triangle(root()).has_value());

  for (const auto& n : expand_all({2, std::nullopt, 0})) {
    if (n.tail_direction == TailDirection::None) continue;
    const auto tri = *tail_triangle(n);
    const auto c0 = cell_geometry(n);
    // every chain member's center lies on the line from the node center to the apex
    for (const auto& m : chain(n, 5)) {
      const auto cm = cell_geometry(m);
      const Rational lhs = (cm.rho_center - c0.rho_center) * (tri.apex.phi - c0.phi_center.value());
      const Rational rhs = (tri.apex.rho - c0.rho_center) * (cm.phi_center.value() - c0.phi_center.value());
      EXPECT_EQ(lhs, rhs) << format_word(m.word);
    }
  }
}

TEST(Wannier, Lines) {
  const auto l2 = wannier_lines(2);
  ASSERT_EQ(l2.size(), 1u);
  EXPECT_EQ(l2[0].sigma, 1);
  EXPECT_EQ(l2[0].tau, 0);
  bool found = false;
  for (const auto& l : wannier_lines(3))
    if (l.flux == FareyFraction(1, 3) && l.r == 2) found = l.sigma == -1 && l.tau == 1;
  EXPECT_TRUE(found);
  for (const auto& l : wannier_lines(25)) {
    EXPECT_EQ(Rational(l.sigma) * l.flux.value() + Rational(l.tau), Rational(l.r, l.flux.den()));
    EXPECT_LE(2 * abs(l.sigma), 25);
  }
  EXPECT_THROW(wannier_lines(1), Error);
}

TEST(Render, DepthZero) {
  const auto nodes = expand_all({0, std::nullopt, 0});
  const auto svg = render_svg(nodes);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  const auto [x0, sx, y0, sy] = transform_of(svg);
  EXPECT_EQ(x0, 20);
  EXPECT_EQ(sx, 760);
  EXPECT_EQ(y0, 580);
  EXPECT_EQ(sy, -560);
  EXPECT_NE(svg.find("<circle cx=\"400.000000000\" cy=\"300.000000000\""), std::string::npos);
  EXPECT_EQ(std::count(svg.begin(), svg.end(), '\n'), 12);
}

TEST(Render, DepthOne) {
  const auto nodes = expand_all({1, std::nullopt, 0});
  RenderOptions opt;
  const auto svg = render_svg(nodes, opt);
  std::set<std::string> fills;
  std::regex re("<polygon points=\"[^\"]*\" fill=\"(#[0-9a-f]{6})\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
    fills.insert((*it)[1]);
  EXPECT_EQ(fills.size(), 7u);  // six baby colors and the root
  std::set<std::string> tails;
  std::regex tre("class=\"tail\" points=\"[^\"]*\" fill=\"(#[0-9a-f]{6})\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tre); it != std::sregex_iterator(); ++it)
    tails.insert((*it)[1]);
  EXPECT_EQ(tails, (std::set<std::string>{opt.palette[6], opt.palette[7]}));
  EXPECT_EQ(render_svg(nodes, opt), svg);
}

TEST(Render, CoordinatesInvertExactly) {
  const auto svg = render_svg(expand_all({0, std::nullopt, 0}), RenderOptions{1000, 500, 50});
  const auto [x0, sx, y0, sy] = transform_of(svg);
  // center (1/2, 1/2)
  EXPECT_EQ(to_fixed(Rational(x0) + Rational(sx, 2), 9), "500.000000000");
  EXPECT_EQ(to_fixed(Rational(y0) + Rational(sy, 2), 9), "250.000000000");
  EXPECT_NE(svg.find("cx=\"500.000000000\" cy=\"250.000000000\""), std::string::npos);
}

TEST(Render, EmptyInputThrows) {
  try {
    render_svg({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
  }
}
