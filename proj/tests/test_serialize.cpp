#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "msrlab/construction.hpp"
#include "msrlab/serialize.hpp"
#include "support/expect.hpp"
#include "support/generators.hpp"
#include "support/golden.hpp"

namespace msrlab {
namespace {

using nlohmann::ordered_json;
using testing::kind_of;

std::string golden() { return testing::read_text(testing::golden_path(testing::kCase2Golden)); }

std::string mutate(const std::string& text, const std::function<void(ordered_json&)>& edit) {
  auto j = ordered_json::parse(text);
  edit(j);
  return j.dump(2);
}

std::string parse_error(const std::string& text) {
  try {
    deserialize(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "accepted";
  return {};
}

TEST(Serialize, GoldenRoundTripIsByteExact) {
  const std::string text = golden();
  ASSERT_FALSE(text.empty());
  const auto file = deserialize(text);
  EXPECT_EQ(serialize(file), text);
  EXPECT_EQ(file.spec.params.alpha, 2u);
  EXPECT_EQ(file.spec.systematic, (std::vector<std::size_t>{0, 1, 2}));
  ASSERT_TRUE(file.scheme.has_value());
  EXPECT_EQ(file.scheme->w_nodes, (std::vector<std::size_t>{0, 1}));
  ASSERT_TRUE(file.structure.has_value());
  EXPECT_EQ(file.structure->Q, 2u);
}

TEST(Serialize, ConstructionReproducesGolden) {
  const auto built = build_case2(7, 3, 4, Field::make(13), {.seed = 1});
  EXPECT_EQ(serialize(built.file()), golden());
}

TEST(Serialize, RoundTripExtensionFieldAndSchemeModes) {
  auto f = Field::make(2, 3, {1, 1, 0, 1});
  const auto spec = random_mds_code(5, 3, 4, 2, f, 9);
  testing::Gen gen(5);

  RepairScheme indep;
  indep.mode = RepairMode::HelperIndependent;
  indep.w_nodes = {0, 4};
  for (std::size_t j : indep.w_nodes)
    for (std::size_t h = 0; h < 5; ++h)
      if (h != j) indep.set(h, j, RepairMatrix::full(gen.of_rank(f, 1, 2, 1)));

  RepairScheme general;
  general.mode = RepairMode::General;
  general.w_nodes = {1};
  for (std::size_t h : {0u, 2u, 3u, 4u}) general.set(h, 1, {0, 2, 3, 4}, RepairMatrix::access({h % 2}, 2));

  for (const auto& scheme : {indep, general}) {
    const CodeFile file{spec, scheme, std::nullopt};
    const std::string text = serialize(file);
    const auto back = deserialize(text);
    EXPECT_EQ(serialize(back), text);
    EXPECT_EQ(back.spec.blocks, spec.blocks);
    EXPECT_EQ(back.scheme->entries, scheme.entries);
    EXPECT_EQ(back.spec.field()->poly(), f->poly());
  }
}

TEST(Serialize, ParseErrors) {
  const std::string text = golden();
  EXPECT_NE(parse_error(mutate(text, [](auto& j) { j.erase("field"); })).find("field"), std::string::npos);
  EXPECT_NE(parse_error(mutate(text, [](auto& j) { j["A"][0][1][1][0] = 13; })).find("out of range"), std::string::npos);
  EXPECT_NE(parse_error(mutate(text, [](auto& j) { j["extra"] = 1; })).find("unknown key"), std::string::npos);
  parse_error("{ not json");
  parse_error(mutate(text, [](auto& j) { j["params"]["alpha"] = 3; }));
  parse_error(mutate(text, [](auto& j) { j["systematic"] = {1, 2, 2}; }));
  parse_error(mutate(text, [](auto& j) { j["parity"] = {4, 5, 6, 8}; }));
  parse_error(mutate(text, [](auto& j) { j["field"]["p"] = 12; }));
  parse_error(mutate(text, [](auto& j) { j["field"]["poly"] = {1, 0, 1}; }));
  parse_error(mutate(text, [](auto& j) { j["repair"]["mode"] = "sometimes"; }));
  parse_error(mutate(text, [](auto& j) { j["repair"]["matrices"]["2,1"]["access"] = {3}; }));
  parse_error(mutate(text, [](auto& j) { j["repair"]["matrices"]["2,1"]["access"] = {2}; }));
  parse_error(mutate(text, [](auto& j) { j["repair"]["matrices"].erase("7,2"); }));
  parse_error(mutate(text, [](auto& j) { j["repair"]["matrices"]["2,1,3"] = {{"access", {1}}}; }));
  parse_error(mutate(text, [](auto& j) { j["structure"]["case"] = 3; }));
}

TEST(Serialize, KeyOrderDoesNotMatter) {
  auto j = ordered_json::parse(golden());
  ordered_json shuffled = ordered_json::object();
  for (const char* key : {"structure", "repair", "A", "parity", "systematic", "params", "field"}) shuffled[key] = j[key];
  EXPECT_EQ(serialize(deserialize(shuffled.dump())), golden());
}

}  // namespace
}  // namespace msrlab
