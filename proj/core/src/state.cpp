#include "butterfly/state.hpp"

namespace butterfly {

std::vector<std::string> ButterflyLabel::violations() const {
  std::vector<std::string> out;
  if (q_right < 1 || q_left < 1) {
    out.push_back("denominators must be positive");
    return out;
  }
  if (gcd(q_right, q_left) != 1) out.push_back("q_R and q_L are not coprime");
  bool is_root = q_right == 1 && q_left == 1 && delta_sigma == 0;
  if (q_right == q_left && !is_root) out.push_back("q_R = q_L away from the root");
  return out;
}

std::strong_ordering operator<=>(const ButterflyLabel& a, const ButterflyLabel& b) {
  auto cmp = [](const Integer& x, const Integer& y) {
    return x < y ? std::strong_ordering::less
                 : (x > y ? std::strong_ordering::greater : std::strong_ordering::equal);
  };
  if (auto c = cmp(a.q_right, b.q_right); c != 0) return c;
  if (auto c = cmp(a.q_left, b.q_left); c != 0) return c;
  return cmp(a.delta_sigma, b.delta_sigma);
}

std::ostream& operator<<(std::ostream& os, const ButterflyLabel& l) {
  return os << '(' << l.q_right << ',' << l.q_left << ',' << l.delta_sigma << ')';
}

std::string_view to_string(TailDirection d) noexcept {
  switch (d) {
    case TailDirection::Left: return "left";
    case TailDirection::Right: return "right";
    case TailDirection::None: break;
  }
  return "none";
}

TailDirection tail_direction_of(const Integer& q_right, const Integer& q_left) {
  if (q_right > q_left) return TailDirection::Right;
  if (q_left > q_right) return TailDirection::Left;
  return TailDirection::None;
}

std::vector<std::string> ButterflyState::violations() const {
  std::vector<std::string> out;
  if (!left.in_unit_interval() || !right.in_unit_interval()) out.push_back("edge outside [0, 1]");
  if (friendly_determinant(left, right) != -1) out.push_back("friendly determinant is not -1");
  if (sigma_plus <= 0 || sigma_minus <= 0) out.push_back("sigma_plus and sigma_minus must be positive");
  if (sigma_plus + sigma_minus != q_center()) out.push_back("sigma_plus + sigma_minus != q_c");
  return out;
}

std::ostream& operator<<(std::ostream& os, const ButterflyState& s) {
  return os << '[' << s.left << ", " << s.center() << ", " << s.right << "] sigma=(" << s.sigma_plus
            << ',' << s.sigma_minus << ')';
}

ButterflyState main_butterfly() { return {FareyFraction(0, 1), FareyFraction(1, 1), 1, 1}; }

}  // namespace butterfly
