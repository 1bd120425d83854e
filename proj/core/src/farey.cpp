#include "butterfly/farey.hpp"

#include "butterfly/errors.hpp"

namespace butterfly {

FareyFraction::FareyFraction(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorCode::InvalidFraction, "zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string FareyFraction::str() const { return to_string(num_) + "/" + to_string(den_); }

std::strong_ordering operator<=>(const FareyFraction& a, const FareyFraction& b) {
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer friendly_determinant(const FareyFraction& a, const FareyFraction& b) {
  return a.num() * b.den() - b.num() * a.den();
}

FriendlyTriplet FriendlyTriplet::from_edges(const FareyFraction& left, const FareyFraction& right) {
  Integer det = friendly_determinant(left, right);
  if (det != -1)
    throw Error(ErrorCode::NotFriendly,
                left.str() + " and " + right.str() + " have determinant " + to_string(det));
  return FriendlyTriplet{left, mediant(left, right), right};
}

FareyFraction mediant(const FareyFraction& a, const FareyFraction& b) {
  return FareyFraction(a.num() + b.num(), a.den() + b.den());
}

bool is_friendly(const FareyFraction& a, const FareyFraction& b) {
  Integer det = friendly_determinant(a, b);
  return det == 1 || det == -1;
}

FareyDifference farey_difference(const FareyFraction& a, const FareyFraction& b) {
  Integer num = b.num() - a.num();
  Integer den = b.den() - a.den();
  if (den == 0)
    throw Error(ErrorCode::DegenerateDifference,
                a.str() + " and " + b.str() + " share a denominator");
  FareyDifference out;
  out.negated = den < 0;
  out.value = FareyFraction(std::move(num), std::move(den));
  return out;
}

std::vector<FriendlyTriplet> stern_brocot_friendly_triplets(const Integer& q_max) {
  if (q_max < 2) throw Error(ErrorCode::InvalidArgument, "q_max must be at least 2");
  std::vector<FriendlyTriplet> out;
  struct Frame {
    FareyFraction left, right;
  };
  std::vector<Frame> stack{{FareyFraction(0, 1), FareyFraction(1, 1)}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.left.den() + f.right.den() > q_max) continue;
    FareyFraction c(f.left.num() + f.right.num(), f.left.den() + f.right.den());
    out.push_back(FriendlyTriplet{f.left, c, f.right});
    // right pushed first so that the left subinterval is visited first
    stack.push_back({c, f.right});
    stack.push_back({f.left, std::move(c)});
  }
  return out;
}

FriendlyTriplet stern_brocot_parents(const FareyFraction& target) {
  if (target.num() <= 0 || target.num() >= target.den())
    throw Error(ErrorCode::InvalidArgument, target.str() + " is not strictly inside (0, 1)");
  // Run-length descent: each continued-fraction partial quotient is taken in
  // one step instead of one mediant at a time.
  Integer pl = 0, ql = 1, pr = 1, qr = 1;
  const Integer& p = target.num();
  const Integer& q = target.den();
  for (;;) {
    Integer pc = pl + pr, qc = ql + qr;
    Integer cmp = p * qc - pc * q;
    if (cmp == 0) break;
    if (cmp < 0) {
      // target left of the mediant: move right edge toward left repeatedly
      // while target < (k*pl + pr)/(k*ql + qr)
      Integer lo = 1, hi = 1;
      auto left_of = [&](const Integer& k) { return p * (k * ql + qr) < (k * pl + pr) * q; };
      while (left_of(hi)) hi *= 2;
      while (lo < hi) {
        Integer mid = (lo + hi + 1) / 2;
        if (left_of(mid)) lo = mid; else hi = mid - 1;
      }
      pr = lo * pl + pr;
      qr = lo * ql + qr;
    } else {
      Integer lo = 1, hi = 1;
      auto beyond = [&](const Integer& k) { return p * (ql + k * qr) > (pl + k * pr) * q; };
      while (beyond(hi)) hi *= 2;
      while (lo < hi) {
        Integer mid = (lo + hi + 1) / 2;
        if (beyond(mid)) lo = mid; else hi = mid - 1;
      }
      pl = pl + lo * pr;
      ql = ql + lo * qr;
    }
  }
  FareyFraction left(pl, ql), right(pr, qr);
  return FriendlyTriplet{left, mediant(left, right), right};
}

}  // namespace butterfly
