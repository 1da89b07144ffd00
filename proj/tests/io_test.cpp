// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <string>

#include "domclo/generate.hpp"
#include "domclo/io.hpp"
#include "domclo/properties.hpp"
#include "domclo/suite.hpp"

namespace domclo {
namespace {

std::string data(const char* name) { return std::string(DOMCLO_DATA_DIR) + "/" + name; }

constexpr const char* kDstarText = R"({"ground": ["a","b","c","d"], "operator": {"kind": "extended",
  "singletons": {"a": ["a","c"], "b": ["b","c"], "c": ["c","d"], "d": ["d"]},
  "overrides": {"a,b": ["a","b","c","d"]}, "empty": []}})";

std::string error_of(const std::string& text) {
  try {
    parse_system(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

TEST(Parse, DstarDocument) {
  const auto doc = parse_system(kDstarText);
  const auto& g = doc.ground;
  EXPECT_EQ(doc.op(parse_subset("a,b", g)), g.full());
  EXPECT_TRUE(same_operator(doc.op, example_dominating()));
  EXPECT_FALSE(doc.map.has_value());
}

TEST(Parse, ShippedFiles) {
  EXPECT_TRUE(same_operator(load_system(data("dstar.json")).op, example_dominating()));
  EXPECT_TRUE(same_operator(load_system(data("noncommutative.json")).op, noncommuting_example()));
  EXPECT_TRUE(same_operator(load_system(data("star.json")).op, star_space(false)));
  EXPECT_TRUE(same_operator(load_system(data("chain.json")).op, chain_downset()));
  const auto inc = load_system(data("inclusion.json"));
  ASSERT_TRUE(inc.map.has_value());
  const auto res = load_system(data("restriction.json"));
  const auto f = map_from_json(*inc.map, inc.ground, res.ground);
  EXPECT_EQ(f, Transformation::inclusion(inc.ground, res.ground));
}

TEST(Parse, ComposeNestsTwoSpecs) {
  const auto doc = parse_system(R"({"ground": ["a","b","c","d"], "operator": {"kind": "compose",
      "first": {"kind": "extended", "singletons": {"a": ["a","c"], "b": ["b","c"], "c": ["c","d"], "d": ["d"]},
                "overrides": {"a,b": ["a","b","c","d"]}},
      "second": {"kind": "identity"}}})");
  EXPECT_EQ(doc.op.kind(), OperatorKind::compose);
  EXPECT_TRUE(same_operator(doc.op, example_dominating()));
  const auto msg = error_of(R"({"ground": ["a"], "operator": {"kind": "compose", "first": {"kind": "identity"},
      "second": {"kind": "star", "star": "q"}}})");
  EXPECT_NE(msg.find("operator.second.star: unknown label 'q'"), std::string::npos) << msg;
  EXPECT_NE(error_of(R"({"ground": ["a"], "operator": {"kind": "compose", "first": {"kind": "identity"}}})")
                .find("operator.second: missing"),
            std::string::npos);
}

TEST(Parse, EmptyGround) {
  const auto doc = parse_system(R"({"ground": [], "operator": {"kind": "table", "images": {"": []}}})");
  EXPECT_EQ(doc.ground.size(), 0);
  EXPECT_TRUE(is_closure(doc.op).holds);
  EXPECT_TRUE(is_extended(doc.op).holds);
  EXPECT_TRUE(is_uniquely_generated(doc.op).holds);
  EXPECT_TRUE(is_antimatroid(doc.op).holds);
  EXPECT_TRUE(is_matroid(doc.op).holds);
}

TEST(Parse, FamilyWithoutGroundRejected) {
  const auto msg = error_of(R"({"ground": ["a","b"], "operator": {"kind": "family", "closed": [[], ["a"]]}})");
  EXPECT_NE(msg.find("does not contain the ground set {a,b}"), std::string::npos) << msg;
  const auto pair = error_of(R"({"ground": ["a","b"], "operator": {"kind": "family", "closed": [["a"], ["b"], ["a","b"]]}})");
  EXPECT_NE(pair.find("{a}"), std::string::npos) << pair;
  EXPECT_NE(pair.find("{b}"), std::string::npos) << pair;
}

TEST(Parse, ValidationMessagesNameTheField) {
  EXPECT_NE(error_of(R"({"operator": {"kind": "identity"}})").find("ground: missing"), std::string::npos);
  EXPECT_NE(error_of(R"({"ground": ["a"], "operator": {"kind": "bogus"}})").find("operator.kind"), std::string::npos);
  EXPECT_NE(error_of(R"({"ground": ["a"], "operator": {"kind": "extended", "singletons": {"a": ["z"]}}})")
                .find("operator.singletons.a: unknown label 'z'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"ground": ["a","b"], "operator": {"kind": "table", "images": {"": [], "a": ["a"], "b": ["b"]}}})")
                .find("no image for {a,b}"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"ground": ["a","b"], "operator": {"kind": "poset-downset", "relations": [["a","b"],["b","a"]]}})")
                .find("cycle"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"ground": ["a","b"], "operator": {"kind": "adjacency", "matrix": [[0,1],[1]]}})").find("row 1"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"ground": ["a","a"], "operator": {"kind": "identity"}})").find("duplicate"), std::string::npos);
}

TEST(Parse, MalformedJsonReportsLineAndColumn) {
  try {
    parse_system("{\n  \"ground\": [\"a\",\n  ]\n}", "broken.json");
    FAIL() << "expected an input error";
  } catch (const InputError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("broken.json"), std::string::npos) << msg;
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  }
  EXPECT_THROW(load_system(data("missing.json")), InputError);
}

TEST(RoundTrip, EveryKind) {
  const GroundSet g3 = GroundSet::letters(3);
  std::vector<Operator> ops{
      example_dominating(),
      noncommuting_example(),
      star_space(true),
      chain_downset(),
      identity_operator(g3),
      from_family(g3, SubsetFamily({Subset::singleton(0), g3.full()})),
      from_adjacency({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, g3),
      compose(example_dominating(), example_dominating()),
      dominated_closure(example_dominating()),
      extended_operator(g3, {Subset(), Subset::singleton(2), Subset()}, {}, Subset::singleton(1)),
  };
  Rng rng(60);
  for (int k = 0; k < 50; ++k) ops.push_back(random_dominating(rng, static_cast<int>(rng.below(6)), true));
  for (const auto& op : ops) {
    const Json doc = system_to_json(op);
    const auto back = parse_system(doc.dump());
    ASSERT_TRUE(same_operator(op, back.op)) << doc.dump();
    EXPECT_EQ(system_to_json(back.op).dump(), doc.dump());
  }
}

TEST(RoundTrip, Maps) {
  Rng rng(61);
  for (int k = 0; k < 50; ++k) {
    const GroundSet s = GroundSet::letters(static_cast<int>(rng.below(4)));
    const GroundSet t = GroundSet::letters(static_cast<int>(rng.below(4)));
    const auto f = random_monotone_map(rng, s, t);
    const Json j = map_to_json(f);
    EXPECT_EQ(map_from_json(j, s, t), f);
  }
  const Json ext = Json::parse(R"({"kind": "extended", "singletons": {"a": ["b"], "b": []}, "empty": ["a"]})");
  const GroundSet g = GroundSet::letters(2);
  const auto f = map_from_json(ext, g, g);
  EXPECT_EQ(f(Subset()), Subset::singleton(0));
  EXPECT_EQ(f(g.full()), Subset::singleton(1));
  EXPECT_THROW(map_from_json(Json::parse(R"({"kind": "identity"})"), g, GroundSet::letters(3)), ValidationError);
}

TEST(Report, Serialization) {
  const Operator d = example_dominating();
  const Json j = report_to_json(is_idempotent(d), d.ground());
  EXPECT_EQ(j["property"], "idempotent");
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["witness"], Json::array({"{a}"}));
  EXPECT_EQ(j["mode"], "exhaustive");
}

TEST(Report, TargetSideWitnessUsesTargetLabels) {
  const GroundSet s({"a", "b"});
  const GroundSet t = GroundSet::letters(4);
  const auto f = Transformation::inclusion(s, t);
  const auto r = is_delta_surjective(f, example_dominating());
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(report_to_json(r, s, &t)["witness"], Json::array({"{a,c}"}));
  EXPECT_THROW(report_to_json(r, s), UsageError);

  // One witness mixing both sides: X from the source, Y' from the target.
  const auto g = Transformation(t, s, std::vector<Subset>(t.power_size(), Subset()));
  const auto adj = galois_adjunction(f, g);
  ASSERT_FALSE(adj.holds);
  const Json w = report_to_json(adj, s, &t)["witness"];
  EXPECT_EQ(w, Json::array({"{a}", "{a}"}));
}

}  // namespace
}  // namespace domclo
