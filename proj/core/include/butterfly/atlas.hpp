#pragma once

#include "butterfly/tree.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace butterfly {

/// Column order shared by the JSON-lines and CSV atlas formats.
inline constexpr std::string_view kAtlasColumns[] = {
    "word", "qR", "qL", "dSigma", "pL", "pR", "pc", "qc",
    "sigmaPlus", "sigmaMinus", "cellClass", "tailDirection", "depth"};

/// Integers beyond 2^53 - 1 become decimal strings; smaller ones stay numbers.
nlohmann::ordered_json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const TreeNode& node);
/// Rebuilds a node from its atlas record without re-deriving anything, so a
/// tampered record still fails verify_node.
TreeNode node_from_json(const nlohmann::ordered_json& j);

std::string to_jsonl(const TreeNode& node);
TreeNode node_from_jsonl(std::string_view line);

std::string csv_header();
std::string to_csv(const TreeNode& node);

}  // namespace butterfly
