#include "butterfly/skeleton.hpp"

#include "butterfly/diophantine.hpp"
#include "butterfly/errors.hpp"

#include <numeric>
#include <sstream>

namespace butterfly {

std::optional<std::size_t> SkeletonCell::color_index() const {
  if (!generator) return std::nullopt;
  return index_of(*generator);
}

std::array<WannierPoint, 4> SkeletonCell::corners() const {
  const Rational l = phi_left.value(), r = phi_right.value();
  return {WannierPoint{l, plus_at_left}, WannierPoint{l, minus_at_left},
          WannierPoint{r, plus_at_right}, WannierPoint{r, minus_at_right}};
}

SkeletonCell cell_geometry(const TreeNode& node) {
  const auto& s = node.state;
  CenterGap gap = center_gap_index(s);
  SkeletonCell cell;
  cell.phi_left = s.left;
  cell.phi_right = s.right;
  cell.phi_center = s.center();
  cell.rho_center = gap.density.value();
  cell.r_center = gap.r;
  cell.slope_plus = s.sigma_plus;
  cell.slope_minus = -s.sigma_minus;
  const Rational pc = cell.phi_center.value();
  auto line = [&](const Integer& slope, const FareyFraction& at) {
    return Rational(slope) * (at.value() - pc) + cell.rho_center;
  };
  cell.plus_at_left = line(cell.slope_plus, s.left);
  cell.plus_at_right = line(cell.slope_plus, s.right);
  cell.minus_at_left = line(cell.slope_minus, s.left);
  cell.minus_at_right = line(cell.slope_minus, s.right);
  if (!node.word.empty()) cell.generator = node.word.back();
  return cell;
}

std::optional<TailTriangle> tail_triangle(const TreeNode& node) {
  if (node.tail_direction == TailDirection::None) return std::nullopt;
  const SkeletonCell cell = cell_geometry(node);
  const TreeNode first = chain(node, 1).front();
  const SkeletonCell next = cell_geometry(first);
  const Rational accumulation = farey_difference(node.state.left, node.state.right).value.value();

  const Rational x0 = cell.phi_center.value(), y0 = cell.rho_center;
  const Rational x1 = next.phi_center.value(), y1 = next.rho_center;
  const Rational apex_rho = y0 + (accumulation - x0) * (y1 - y0) / (x1 - x0);

  TailTriangle t;
  if (node.tail_direction == TailDirection::Right) {
    t.base_low = {cell.phi_right.value(), cell.minus_at_right};
    t.base_high = {cell.phi_right.value(), cell.plus_at_right};
  } else {
    t.base_low = {cell.phi_left.value(), cell.plus_at_left};
    t.base_high = {cell.phi_left.value(), cell.minus_at_left};
  }
  t.apex = {accumulation, apex_rho};
  return t;
}

std::vector<WannierLine> wannier_lines(std::int64_t q_max) {
  if (q_max < 2) throw Error(ErrorCode::InvalidArgument, "q_max must be at least 2");
  std::vector<WannierLine> out;
  for (std::int64_t q = 2; q <= q_max; ++q)
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (const auto& g : gap_labels(p, q))
        out.push_back({g.sigma, g.tau, FareyFraction(p, q), g.r});
    }
  return out;
}

namespace {

struct Canvas {
  Rational x0, sx, y0, sy;

  std::string x(const Rational& phi) const { return to_fixed(x0 + sx * phi, 9); }
  std::string y(const Rational& rho) const { return to_fixed(y0 + sy * rho, 9); }
  std::string point(const WannierPoint& p) const { return x(p.phi) + "," + y(p.rho); }
};

std::string xml_id(const TreeNode& node) {
  std::string w = format_word(node.word);
  for (auto& c : w)
    if (c == '.') c = '-';
  return w.empty() ? "cell-root" : "cell-" + w;
}

}  // namespace

std::string render_svg(std::span<const TreeNode> nodes, const RenderOptions& options) {
  if (nodes.empty()) throw Error(ErrorCode::EmptyInput, "nothing to render");
  const unsigned inner_w = options.width - 2 * options.margin;
  const unsigned inner_h = options.height - 2 * options.margin;
  const Canvas canvas{Rational(options.margin), Rational(inner_w),
                      Rational(options.margin + inner_h), -Rational(inner_h)};

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width
      << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
      << options.height << "\">\n"
      << "<metadata id=\"wannier-transform\">x0=" << options.margin << " sx=" << inner_w
      << " y0=" << options.margin + inner_h << " sy=-" << inner_h << "</metadata>\n"
      << "<desc>Butterfly skeleton in the (flux, density) plane: x = x0 + sx*phi, y = y0 + sy*rho."
      << "</desc>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\"" << options.height
      << "\" fill=\"#ffffff\"/>\n";

  for (const auto& node : nodes) {
    const SkeletonCell cell = cell_geometry(node);
    const auto corners = cell.corners();
    const std::string color =
        cell.color_index() ? options.palette[*cell.color_index()] : std::string("#000000");
    svg << "<g id=\"" << xml_id(node) << "\" class=\""
        << (cell.generator ? std::string(letter(*cell.generator)) : std::string("root")) << "\">\n";
    svg << "  <polygon points=\"" << canvas.point(corners[0]) << ' ' << canvas.point(corners[1])
        << ' ' << canvas.point(corners[2]) << ' ' << canvas.point(corners[3]) << "\" fill=\""
        << color << "\" fill-opacity=\"0.25\" stroke=\"" << color << "\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"" << canvas.x(corners[0].phi) << "\" y1=\"" << canvas.y(corners[0].rho)
        << "\" x2=\"" << canvas.x(corners[2].phi) << "\" y2=\"" << canvas.y(corners[2].rho)
        << "\" stroke=\"" << color << "\"/>\n";
    svg << "  <line x1=\"" << canvas.x(corners[1].phi) << "\" y1=\"" << canvas.y(corners[1].rho)
        << "\" x2=\"" << canvas.x(corners[3].phi) << "\" y2=\"" << canvas.y(corners[3].rho)
        << "\" stroke=\"" << color << "\"/>\n";
    svg << "  <circle cx=\"" << canvas.x(cell.phi_center.value()) << "\" cy=\""
        << canvas.y(cell.rho_center) << "\" r=\"2\" fill=\"" << color << "\"/>\n";

    if (auto tri = tail_triangle(node)) {
      const auto tail = *tail_generator(node.tail_direction);
      const std::string& tail_color = options.palette[index_of(tail)];
      svg << "  <polygon class=\"tail\" points=\"" << canvas.point(tri->base_low) << ' '
          << canvas.point(tri->base_high) << ' ' << canvas.point(tri->apex) << "\" fill=\""
          << tail_color << "\" fill-opacity=\"0.15\" stroke=\"" << tail_color
          << "\" stroke-width=\"0.5\"/>\n";
      if (options.tail_dots > 0)
        for (const auto& member : chain(node, options.tail_dots)) {
          const SkeletonCell mc = cell_geometry(member);
          svg << "  <circle class=\"tail\" cx=\"" << canvas.x(mc.phi_center.value()) << "\" cy=\""
              << canvas.y(mc.rho_center) << "\" r=\"1\" fill=\"" << tail_color << "\"/>\n";
        }
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace butterfly
