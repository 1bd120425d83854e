#include "butterfly/atlas.hpp"

#include "butterfly/errors.hpp"

namespace butterfly {

using nlohmann::ordered_json;

ordered_json integer_to_json(const Integer& x) {
  if (is_json_safe(x)) return x.convert_to<std::int64_t>();
  return to_string(x);
}

Integer integer_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

ordered_json to_json(const TreeNode& node) {
  const auto& s = node.state;
  ordered_json j;
  j["word"] = format_word(node.word);
  j["qR"] = integer_to_json(node.label.q_right);
  j["qL"] = integer_to_json(node.label.q_left);
  j["dSigma"] = integer_to_json(node.label.delta_sigma);
  j["pL"] = integer_to_json(s.left.num());
  j["pR"] = integer_to_json(s.right.num());
  j["pc"] = integer_to_json(s.p_center());
  j["qc"] = integer_to_json(s.q_center());
  j["sigmaPlus"] = integer_to_json(s.sigma_plus);
  j["sigmaMinus"] = integer_to_json(s.sigma_minus);
  j["cellClass"] = std::string(to_string(node.cell_class));
  j["tailDirection"] = std::string(to_string(node.tail_direction));
  j["depth"] = node.depth;
  return j;
}

namespace {

const ordered_json& field(const ordered_json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw Error(ErrorCode::ParseError, std::string("missing field '") + name + "'");
  return *it;
}

CellClass parse_cell_class(const std::string& s) {
  for (auto c : {CellClass::Root, CellClass::Central, CellClass::Edge, CellClass::Chain})
    if (to_string(c) == s) return c;
  throw Error(ErrorCode::ParseError, "unknown cellClass '" + s + "'");
}

TailDirection parse_tail(const std::string& s) {
  for (auto d : {TailDirection::None, TailDirection::Left, TailDirection::Right})
    if (to_string(d) == s) return d;
  throw Error(ErrorCode::ParseError, "unknown tailDirection '" + s + "'");
}

}  // namespace

TreeNode node_from_json(const ordered_json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "atlas record must be an object");
  TreeNode node;
  node.word = parse_word(field(j, "word").get<std::string>());
  node.label = {integer_from_json(field(j, "qR")), integer_from_json(field(j, "qL")),
                integer_from_json(field(j, "dSigma"))};
  Integer pl = integer_from_json(field(j, "pL"));
  Integer pr = integer_from_json(field(j, "pR"));
  if (node.label.q_left < 1 || node.label.q_right < 1)
    throw Error(ErrorCode::ParseError, "denominators must be positive");
  node.state.left = FareyFraction(pl, node.label.q_left);
  node.state.right = FareyFraction(pr, node.label.q_right);
  node.state.sigma_plus = integer_from_json(field(j, "sigmaPlus"));
  node.state.sigma_minus = integer_from_json(field(j, "sigmaMinus"));
  if (integer_from_json(field(j, "pc")) != pl + pr ||
      integer_from_json(field(j, "qc")) != node.label.q_left + node.label.q_right)
    throw Error(ErrorCode::ParseError, "center fields disagree with the edges");
  node.cell_class = parse_cell_class(field(j, "cellClass").get<std::string>());
  node.tail_direction = parse_tail(field(j, "tailDirection").get<std::string>());
  node.depth = field(j, "depth").get<std::size_t>();
  return node;
}

std::string to_jsonl(const TreeNode& node) { return to_json(node).dump(); }

TreeNode node_from_jsonl(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return node_from_json(j);
}

std::string csv_header() {
  std::string out;
  for (std::size_t i = 0; i < std::size(kAtlasColumns); ++i) {
    if (i) out += ',';
    out += kAtlasColumns[i];
  }
  return out;
}

std::string to_csv(const TreeNode& node) {
  const auto& s = node.state;
  std::string out = format_word(node.word);
  for (const Integer* v : {&node.label.q_right, &node.label.q_left, &node.label.delta_sigma}) {
    out += ',';
    out += to_string(*v);
  }
  out += ',' + to_string(s.left.num()) + ',' + to_string(s.right.num()) + ',' +
         to_string(s.p_center()) + ',' + to_string(s.q_center()) + ',' + to_string(s.sigma_plus) +
         ',' + to_string(s.sigma_minus) + ',' + std::string(to_string(node.cell_class)) + ',' +
         std::string(to_string(node.tail_direction)) + ',' + std::to_string(node.depth);
  return out;
}

}  // namespace butterfly
