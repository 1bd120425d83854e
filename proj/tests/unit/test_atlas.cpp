#include "butterfly/atlas.hpp"
#include "butterfly/errors.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace butterfly;
using G = GeneratorKind;

TEST(Atlas, JsonFieldsInOrder) {
  const auto j = to_json(node_at({G::UL, G::UL}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  ASSERT_EQ(keys.size(), std::size(kAtlasColumns));
  for (std::size_t i = 0; i < keys.size(); ++i) EXPECT_EQ(keys[i], kAtlasColumns[i]);
  EXPECT_EQ(j["qR"], 5);
  EXPECT_EQ(j["qL"], 8);
  EXPECT_EQ(j["dSigma"], -3);
  EXPECT_EQ(j["word"], "UL.UL");
  EXPECT_EQ(j["cellClass"], "E-cell");
  EXPECT_EQ(j["tailDirection"], "left");
}

TEST(Atlas, RoundTripEveryNode) {
  for (const auto& n : expand_all({3, std::nullopt, 3})) {
    const auto back = node_from_jsonl(to_jsonl(n));
    EXPECT_EQ(back.state, n.state);
    EXPECT_EQ(back.word, n.word);
    EXPECT_EQ(back.cell_class, n.cell_class);
    EXPECT_EQ(back.tail_direction, n.tail_direction);
    EXPECT_EQ(back.depth, n.depth);
    EXPECT_TRUE(verify_node(back).passed());
  }
}

TEST(Atlas, LargeIntegersBecomeStrings) {
  Word w(40, G::UL);
  const auto n = node_at(w);
  ASSERT_FALSE(is_json_safe(n.state.q_center()));
  const auto j = to_json(n);
  EXPECT_TRUE(j["qc"].is_string());
  EXPECT_EQ(j["qc"].get<std::string>(), to_string(n.state.q_center()));
  EXPECT_TRUE(j["depth"].is_number());
  const auto back = node_from_json(j);
  EXPECT_EQ(back.state, n.state);
  EXPECT_TRUE(verify_node(back).passed());
  EXPECT_EQ(integer_from_json(integer_to_json(Integer(5))), 5);
}

TEST(Atlas, TamperedRecordFailsVerification) {
  auto j = to_json(node_at({G::CR, G::DL}));
  j["sigmaPlus"] = j["sigmaPlus"].get<long long>() + 1;
  j["sigmaMinus"] = j["sigmaMinus"].get<long long>() - 1;
  const auto n = node_from_json(j);
  EXPECT_FALSE(verify_node(n).passed());
}

TEST(Atlas, MalformedRecordsThrow) {
  EXPECT_THROW(node_from_jsonl("not json"), Error);
  EXPECT_THROW(node_from_jsonl("{\"word\":\"UL\"}"), Error);
  auto j = to_json(node_at({G::UL}));
  j["pc"] = 7;
  EXPECT_THROW(node_from_json(j), Error);
}

TEST(Atlas, CsvMatchesColumns) {
  std::string header = csv_header();
  std::size_t commas = std::count(header.begin(), header.end(), ',');
  EXPECT_EQ(commas + 1, std::size(kAtlasColumns));
  EXPECT_EQ(header.substr(0, 10), "word,qR,qL");
  EXPECT_EQ(to_csv(node_at({G::UL})), "UL,2,3,-1,1,1,2,5,2,3,E-cell,left,1");
}
