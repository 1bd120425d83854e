#include "butterfly/tree.hpp"

#include "butterfly/diophantine.hpp"
#include "butterfly/errors.hpp"

#include <sstream>

namespace butterfly {

std::string_view to_string(CellClass c) noexcept {
  switch (c) {
    case CellClass::Root: return "root";
    case CellClass::Central: return "C-cell";
    case CellClass::Edge: return "E-cell";
    case CellClass::Chain: return "chain";
  }
  return "root";
}

CellClass cell_class_of(const Word& word) noexcept {
  if (word.empty()) return CellClass::Root;
  GeneratorKind last = word.back();
  if (is_chain(last)) return CellClass::Chain;
  if (is_central(last)) return CellClass::Central;
  return CellClass::Edge;
}

std::size_t TreeNode::chain_run() const {
  std::size_t run = 0;
  for (auto it = word.rbegin(); it != word.rend() && is_chain(*it); ++it) ++run;
  return run;
}

namespace {

TreeNode from_state(ButterflyState state, Word word) {
  TreeNode node;
  node.label = state.label();
  node.tail_direction = state.tail_direction();
  node.state = std::move(state);
  node.cell_class = cell_class_of(word);
  node.depth = word.size();
  node.word = std::move(word);
  return node;
}

}  // namespace

TreeNode root() { return from_state(main_butterfly(), {}); }

TreeNode make_child(const TreeNode& parent, GeneratorKind kind) {
  Word word = parent.word;
  word.push_back(kind);
  TreeNode child = from_state(apply_state(kind, parent.state), std::move(word));
  std::vector<std::string> bad = child.state.violations();
  for (auto& v : child.label.violations()) bad.push_back(std::move(v));
  if (child.tail_direction == TailDirection::None) bad.push_back("non-root node without a tail");
  if (!bad.empty())
    throw Error(ErrorCode::InvariantViolation, format_word(child.word) + ": " + bad.front());
  return child;
}

std::vector<TreeNode> children(const TreeNode& node) {
  std::vector<TreeNode> out;
  out.reserve(7);
  for (auto k : kBabyGenerators) out.push_back(make_child(node, k));
  if (auto tail = tail_generator(node.tail_direction)) out.push_back(make_child(node, *tail));
  return out;
}

std::vector<TreeNode> chain(const TreeNode& node, std::size_t steps) {
  auto tail = tail_generator(node.tail_direction);
  if (!tail) throw Error(ErrorCode::NoTail, "the main butterfly has no tail");
  std::vector<TreeNode> out;
  out.reserve(steps);
  const TreeNode* current = &node;
  for (std::size_t i = 0; i < steps; ++i) {
    out.push_back(make_child(*current, *tail));
    current = &out.back();
  }
  return out;
}

TreeNode node_at(const Word& word) {
  ButterflyState state = main_butterfly();
  for (std::size_t i = 0; i < word.size(); ++i) {
    try {
      state = apply_state(word[i], state);
    } catch (const TailDirectionMismatch& e) {
      Word prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
      throw TailDirectionMismatch(
          i, "after prefix '" + format_word(prefix) + "', " + std::string(symbol(word[i])) +
                 " is not applicable (" + e.what() + ")");
    }
  }
  return from_state(std::move(state), word);
}

void expand(const ExpansionLimits& limits, const std::function<void(const TreeNode&)>& visit) {
  auto within = [&](const TreeNode& n) { return !limits.max_qc || n.state.q_center() <= *limits.max_qc; };
  std::vector<TreeNode> level;
  TreeNode r = root();
  if (!within(r)) return;
  visit(r);
  level.push_back(std::move(r));
  for (std::size_t depth = 1; depth <= limits.max_depth && !level.empty(); ++depth) {
    std::vector<TreeNode> next;
    next.reserve(level.size() * 7);
    for (const auto& parent : level) {
      for (auto k : kBabyGenerators) {
        TreeNode child = make_child(parent, k);
        if (within(child)) next.push_back(std::move(child));
      }
      auto tail = tail_generator(parent.tail_direction);
      if (tail && parent.chain_run() < limits.chain_cap) {
        TreeNode child = make_child(parent, *tail);
        if (within(child)) next.push_back(std::move(child));
      }
    }
    for (const auto& n : next) visit(n);
    level = std::move(next);
  }
}

std::vector<TreeNode> expand_all(const ExpansionLimits& limits) {
  std::vector<TreeNode> out;
  expand(limits, [&](const TreeNode& n) { out.push_back(n); });
  return out;
}

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<CheckResult> VerificationReport::failures() const {
  std::vector<CheckResult> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c);
  return out;
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

/// Expected center denominator of a child, from the parent's (q_R, q_L).
Integer expected_child_qc(GeneratorKind kind, const ButterflyState& parent) {
  const Integer qc = parent.q_center();
  const Integer& ql = parent.left.den();
  const Integer& qr = parent.right.den();
  switch (kind) {
    case GeneratorKind::CL: return qc + 2 * ql;
    case GeneratorKind::CR: return qc + 2 * qr;
    case GeneratorKind::UL:
    case GeneratorKind::DL: return 2 * qc + ql;
    case GeneratorKind::UR:
    case GeneratorKind::DR: return 2 * qc + qr;
    case GeneratorKind::TL:
    case GeneratorKind::TR: {
      Integer diff = qr > ql ? Integer(qr - ql) : Integer(ql - qr);
      return qc + 2 * diff;
    }
  }
  return qc;
}

bool closed_interval_contains(const ButterflyState& outer, const ButterflyState& inner) {
  return outer.left <= inner.left && inner.right <= outer.right;
}

}  // namespace

VerificationReport verify_node(const TreeNode& node) {
  VerificationReport report;
  auto add = [&](std::string_view name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::string(name), ok, ok ? std::string{} : std::move(detail)});
  };
  const ButterflyState& s = node.state;

  Integer det = friendly_determinant(s.left, s.right);
  add(checks::kFriendlyDeterminant, det == -1, "p_L q_R - p_R q_L = " + to_string(det));
  add(checks::kUnitInterval, s.left.in_unit_interval() && s.right.in_unit_interval(),
      "edges " + s.left.str() + ", " + s.right.str());
  add(checks::kChernSum, s.sigma_plus + s.sigma_minus == s.q_center(),
      "sigma_plus + sigma_minus = " + to_string(Integer(s.sigma_plus + s.sigma_minus)) +
          ", q_c = " + to_string(s.q_center()));
  add(checks::kChernPositive, s.sigma_plus > 0 && s.sigma_minus > 0, "non-positive Chern number");

  Rational width = s.right.value() - s.left.value();
  Rational expected_width(Integer(1), s.left.den() * s.right.den());
  add(checks::kWidth, width == expected_width,
      "width " + to_string(width) + " != " + to_string(expected_width));

  add(checks::kLabel, node.label == s.label() && node.label.violations().empty(), "label mismatch");

  {
    bool ok = false;
    std::string detail;
    try {
      auto [pl, pr] = recover_edges(node.label.q_right, node.label.q_left);
      ok = pl == s.left.num() && pr == s.right.num();
      detail = "recovered numerators (" + to_string(pl) + ", " + to_string(pr) + ")";
    } catch (const Error& e) {
      detail = e.what();
    }
    add(checks::kEdgeRecovery, ok, detail);
  }

  add(checks::kTailDirection,
      node.tail_direction == tail_direction_of(s.right.den(), s.left.den()) &&
          (node.word.empty() == (node.tail_direction == TailDirection::None)),
      "tail direction " + std::string(to_string(node.tail_direction)));
  add(checks::kCellClass, node.cell_class == cell_class_of(node.word),
      "cell class " + std::string(to_string(node.cell_class)));
  add(checks::kDepth, node.depth == node.word.size(), "depth != word length");

  std::vector<ButterflyState> path;  // states along the address, root first
  path.reserve(node.word.size() + 1);
  path.push_back(main_butterfly());
  bool address_ok = true;
  std::string address_detail;
  try {
    for (auto k : node.word) path.push_back(apply_state(k, path.back()));
    address_ok = path.back() == s;
    if (!address_ok) {
      std::ostringstream os;
      os << "address reaches " << path.back();
      address_detail = os.str();
    }
  } catch (const Error& e) {
    address_ok = false;
    address_detail = e.what();
  }
  add(checks::kAddress, address_ok, address_detail);

  if (node.word.empty() || path.size() != node.word.size() + 1) return report;

  const std::size_t n = node.word.size();
  const ButterflyState& parent = path[n - 1];
  const GeneratorKind last = node.word.back();

  Integer want_qc = expected_child_qc(last, parent);
  bool parity_ok = s.q_center() == want_qc;
  if (!is_edge(last)) parity_ok = parity_ok && (s.q_center() % 2 == parent.q_center() % 2);
  add(checks::kParity, parity_ok,
      "q_c = " + to_string(s.q_center()) + ", expected " + to_string(want_qc));

  std::size_t run = node.chain_run();
  if (run == 0) {
    add(checks::kNesting, closed_interval_contains(parent, s), "interval not inside parent");
    return report;
  }

  // Chain node: the owner is the butterfly the tail hangs from; its members
  // live inside the owner's parent and run monotonically toward the
  // accumulation point of the owner's edges.
  const ButterflyState& owner = path[n - run];
  const ButterflyState& owner_parent = path[n - run - 1];
  add(checks::kNesting, closed_interval_contains(owner_parent, s),
      "chain member outside the interval of its owner's parent");

  add(checks::kChainInheritance, s.delta_sigma() == owner.delta_sigma() &&
                                     s.q_center() % 2 == owner.q_center() % 2,
      "delta sigma " + to_string(s.delta_sigma()) + " vs owner " + to_string(owner.delta_sigma()));

  bool order_ok = false;
  std::string order_detail;
  try {
    auto acc_owner = farey_difference(owner.left, owner.right).value;
    auto acc_self = farey_difference(s.left, s.right).value;
    if (last == GeneratorKind::TR)
      order_ok = parent.right <= s.left && s.right <= acc_owner;
    else
      order_ok = s.right <= parent.left && acc_owner <= s.left;
    order_ok = order_ok && acc_self == acc_owner;
    order_detail = "accumulation point " + acc_owner.str();
  } catch (const Error& e) {
    order_detail = e.what();
  }
  add(checks::kChainOrder, order_ok, order_detail);
  return report;
}

}  // namespace butterfly
