#pragma once

#include "butterfly/farey.hpp"
#include "butterfly/integer.hpp"
#include "butterfly/tree.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace butterfly {

/// A point of the Wannier plane: flux on the horizontal axis, integrated
/// density on the vertical one.
struct WannierPoint {
  Rational phi;
  Rational rho;
  friend bool operator==(const WannierPoint&, const WannierPoint&) = default;
};

/// Trapezoid of one butterfly: vertical edges at the edge fluxes, diagonals
/// rho = sigma_plus (phi - phi_c) + rho_c and rho = -sigma_minus (phi - phi_c) + rho_c
/// crossing at the center, clipped to [phi_L, phi_R].
struct SkeletonCell {
  FareyFraction phi_left;
  FareyFraction phi_right;
  FareyFraction phi_center;
  Rational rho_center;
  Integer r_center;
  Integer slope_plus;   ///< sigma_plus
  Integer slope_minus;  ///< -sigma_minus
  Rational plus_at_left, plus_at_right;
  Rational minus_at_left, minus_at_right;
  std::optional<GeneratorKind> generator;  ///< creator; empty at the root

  /// Palette slot 0..7 of the creating generator; empty at the root.
  std::optional<std::size_t> color_index() const;
  /// Outline in drawing order: lower-left, upper-left, upper-right, lower-right.
  std::array<WannierPoint, 4> corners() const;
};

SkeletonCell cell_geometry(const TreeNode& node);

/// Region housing a node's tail: the cell's vertical edge on the tail side and
/// an apex at the chain's accumulation flux. Tail centers are collinear with
/// the node's center; the apex lies on that line.
struct TailTriangle {
  WannierPoint base_low;
  WannierPoint base_high;
  WannierPoint apex;
};

std::optional<TailTriangle> tail_triangle(const TreeNode& node);

/// Gap line rho = sigma phi + tau through (p/q, r/q).
struct WannierLine {
  Integer sigma;
  Integer tau;
  FareyFraction flux;
  Integer r;
};

/// Canonical line of every gap of every reduced flux p/q in [0, 1], q <= q_max,
/// ordered by q, then p, then r.
std::vector<WannierLine> wannier_lines(std::int64_t q_max);

struct RenderOptions {
  unsigned width = 800;
  unsigned height = 600;
  unsigned margin = 20;
  std::size_t tail_dots = 3;  ///< chain members drawn as dots inside each tail triangle
  std::array<std::string, 8> palette{"#2e7d32", "#81c784", "#c62828", "#ef6c00",
                                     "#6a1b9a", "#f9a825", "#1565c0", "#64b5f6"};
};

/// Deterministic SVG 1.1 document. Coordinates are exact rationals printed
/// with nine fractional digits; the affine map x = x0 + sx*phi,
/// y = y0 + sy*rho is recorded in a <metadata id="wannier-transform"> element.
std::string render_svg(std::span<const TreeNode> nodes, const RenderOptions& options = {});

}  // namespace butterfly
