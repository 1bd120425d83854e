#pragma once

#include "butterfly/generators.hpp"
#include "butterfly/state.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace butterfly {

enum class CellClass { Root, Central, Edge, Chain };

/// "root", "C-cell", "E-cell", "chain"
std::string_view to_string(CellClass c) noexcept;
CellClass cell_class_of(const Word& word) noexcept;

/// A butterfly together with its address in the octonary tree.
struct TreeNode {
  ButterflyLabel label;
  ButterflyState state;
  Word word;
  CellClass cell_class = CellClass::Root;
  TailDirection tail_direction = TailDirection::None;
  std::size_t depth = 0;

  /// Number of trailing chain letters of the address.
  std::size_t chain_run() const;
};

struct ExpansionLimits {
  std::size_t max_depth = 0;
  std::optional<Integer> max_qc;  ///< nodes above this center denominator are pruned
  std::size_t chain_cap = 0;      ///< longest run of consecutive tail steps
};

TreeNode root();

/// Applies one generator and checks every node invariant of the result.
/// Throws TailDirectionMismatch, or InvariantViolation if a child is malformed.
TreeNode make_child(const TreeNode& parent, GeneratorKind kind);

/// The sextuplet in canonical order, followed by the chain successor when the
/// node has a tail.
std::vector<TreeNode> children(const TreeNode& node);

/// `steps` successive members of the node's tail. Throws NoTail at the root.
std::vector<TreeNode> chain(const TreeNode& node, std::size_t steps);

/// Folds the word from the root. Throws TailDirectionMismatch naming the
/// failing prefix.
TreeNode node_at(const Word& word);

/// Breadth-first enumeration within `limits`: depth by depth, and within a
/// parent in the order CL, CR, UL, UR, DL, DR, tail.
void expand(const ExpansionLimits& limits, const std::function<void(const TreeNode&)>& visit);
std::vector<TreeNode> expand_all(const ExpansionLimits& limits);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::vector<CheckResult> failures() const;
  const CheckResult* find(std::string_view name) const;
};

/// Check names reported by verify_node.
namespace checks {
inline constexpr std::string_view kFriendlyDeterminant = "friendly-determinant";
inline constexpr std::string_view kUnitInterval = "unit-interval";
inline constexpr std::string_view kChernSum = "chern-sum";
inline constexpr std::string_view kChernPositive = "chern-positive";
inline constexpr std::string_view kWidth = "width";
inline constexpr std::string_view kLabel = "label";
inline constexpr std::string_view kEdgeRecovery = "edge-recovery";
inline constexpr std::string_view kTailDirection = "tail-direction";
inline constexpr std::string_view kCellClass = "cell-class";
inline constexpr std::string_view kDepth = "depth";
inline constexpr std::string_view kAddress = "address";
inline constexpr std::string_view kNesting = "nesting";
inline constexpr std::string_view kParity = "parity";
inline constexpr std::string_view kChainInheritance = "chain-inheritance";
inline constexpr std::string_view kChainOrder = "chain-order";
}  // namespace checks

/// Checks one node against every structural invariant of the tree. Parent
/// and chain owner are reconstructed from the address, so the node may come
/// from an export or be tampered with.
VerificationReport verify_node(const TreeNode& node);

}  // namespace butterfly
