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

#include "domclo/error.hpp"
#include "domclo/generate.hpp"
#include "domclo/operators.hpp"
#include "domclo/suite.hpp"
#include "oracle.hpp"

namespace domclo {
namespace {

using oracle::labels;

class Dstar : public ::testing::Test {
 protected:
  Operator d = example_dominating();
  const GroundSet& g = d.ground();
  Subset s(const char* text) const { return parse_subset(text, g); }
};

TEST_F(Dstar, SingletonAndOverrideImages) {
  EXPECT_EQ(d(s("a")), s("a,c"));
  EXPECT_EQ(d(s("a,b")), s("a,b,c,d"));
  EXPECT_EQ(d(s("a,c")), s("a,c,d"));
  EXPECT_EQ(d(s("d")), s("d"));
  EXPECT_EQ(d(Subset()), Subset());
}

TEST_F(Dstar, MatchesLabelOracleOffOverride) {
  // Union of singleton images everywhere except the one override key.
  const std::map<std::string, oracle::LSet> single{
      {"a", labels({"a", "c"})}, {"b", labels({"b", "c"})}, {"c", labels({"c", "d"})}, {"d", labels({"d"})}};
  for (Subset y : powerset(g)) {
    oracle::LSet want;
    for (const auto& e : oracle::to_lset(y, g)) want = oracle::unite(want, single.at(e));
    if (y == s("a,b")) want = labels({"a", "b", "c", "d"});
    EXPECT_EQ(oracle::to_lset(d(y), g), want) << format_subset(y, g);
  }
}

TEST_F(Dstar, Neighborhood) {
  EXPECT_EQ(eta(d, s("a")), s("c"));
  EXPECT_EQ(eta(d, s("d")), Subset());
}

TEST_F(Dstar, CongruentExperience) {
  EXPECT_TRUE(congruent_experience(d, 3, s("c")));
  EXPECT_FALSE(congruent_experience(d, 0, s("d")));
  for (Subset y : powerset(g)) EXPECT_TRUE(congruent_experience(d, 3, y));
  EXPECT_THROW(congruent_experience(d, 7, s("a")), UsageError);
}

TEST_F(Dstar, SelfComposition) {
  const Operator dd = compose(d, d);
  EXPECT_EQ(dd(s("a")), s("a,c,d"));
  const auto naive = oracle::wrap(d);
  for (Subset y : powerset(g)) EXPECT_EQ(oracle::to_lset(dd(y), g), naive(naive(oracle::to_lset(y, g))));
}

TEST_F(Dstar, ForeignSubsetIsUsageError) {
  EXPECT_THROW(d(Subset::singleton(5)), UsageError);
  EXPECT_THROW(compose(d, identity_operator(GroundSet::letters(3))), UsageError);
}

TEST(Extended, EmptyImageDefaultsToEmpty) {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const int n = static_cast<int>(rng.below(6));
    std::vector<Subset> singles;
    for (int i = 0; i < n; ++i) singles.push_back(rng.subset(n));
    EXPECT_TRUE(extended_operator(GroundSet::letters(n), singles)(Subset()).empty());
  }
}

TEST(Extended, ValidatesInput) {
  const GroundSet g = GroundSet::letters(2);
  EXPECT_THROW(extended_operator(g, {Subset()}), ValidationError);
  EXPECT_THROW(extended_operator(g, {Subset(), Subset::singleton(3)}), ValidationError);
  EXPECT_THROW(extended_operator(g, {Subset(), Subset()}, {{Subset::singleton(0), Subset()}}), ValidationError);
}

TEST(Family, SmallestContainingMember) {
  const GroundSet g = GroundSet::letters(2);
  auto s = [&](const char* t) { return parse_subset(t, g); };
  const Operator phi = from_family(g, SubsetFamily({Subset(), s("a"), s("a,b")}));
  EXPECT_EQ(phi(s("b")), s("a,b"));
  EXPECT_EQ(phi(s("a")), s("a"));
  EXPECT_EQ(phi(Subset()), Subset());

  const Operator indiscrete = from_family(g, SubsetFamily({g.full()}));
  for (Subset y : powerset(g)) EXPECT_EQ(indiscrete(y), g.full());

  const GroundSet g4 = GroundSet::letters(4);
  const auto all = powerset(g4);
  const Operator discrete = from_family(g4, SubsetFamily(std::vector<Subset>(all.begin(), all.end())));
  EXPECT_TRUE(same_operator(discrete, identity_operator(g4)));
}

TEST(Family, RejectsMissingGroundAndMissingIntersections) {
  const GroundSet g = GroundSet::letters(2);
  auto s = [&](const char* t) { return parse_subset(t, g); };
  EXPECT_THROW(from_family(g, SubsetFamily({Subset(), s("a")})), ValidationError);
  try {
    from_family(g, SubsetFamily({s("a"), s("b"), s("a,b")}));
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("{a}"), std::string::npos) << msg;
    EXPECT_NE(msg.find("{b}"), std::string::npos) << msg;
  }
}

TEST(Downset, ChainAndAntichain) {
  const GroundSet g = GroundSet::letters(3);
  auto s = [&](const char* t) { return parse_subset(t, g); };
  const Operator chain = downset_operator({{0, 1}, {1, 2}}, g);
  EXPECT_EQ(chain(s("b")), s("a,b"));
  EXPECT_EQ(chain(s("b,c")), s("a,b,c"));
  EXPECT_EQ(chain(s("a")), s("a"));
  EXPECT_TRUE(same_operator(downset_operator({}, g), identity_operator(g)));
}

TEST(Downset, CycleIsNamed) {
  const GroundSet g = GroundSet::letters(3);
  try {
    downset_operator({{0, 1}, {1, 2}, {2, 0}}, g);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
  }
}

TEST(Star, Images) {
  for (bool flag : {false, true}) {
    const Operator st = star_space(flag);
    const GroundSet& g = st.ground();
    auto s = [&](const char* t) { return parse_subset(t, g); };
    EXPECT_EQ(st(s("p")), s("p,*"));
    EXPECT_EQ(st(s("*")), s("*"));
    EXPECT_EQ(st(s("p,q")), s("p,q,*"));
    EXPECT_EQ(st(Subset()), flag ? s("*") : Subset());
  }
}

TEST(Adjacency, NeighborUnion) {
  const GroundSet g = GroundSet::letters(2);
  auto s = [&](const char* t) { return parse_subset(t, g); };
  EXPECT_EQ(from_adjacency({{0, 1}, {1, 0}}, g)(s("a")), s("a,b"));
  EXPECT_TRUE(same_operator(from_adjacency({{0, 0}, {0, 0}}, g), identity_operator(g)));
  const Operator directed = from_adjacency({{0, 1}, {0, 0}}, g);
  EXPECT_EQ(directed(s("b")), s("b"));
  EXPECT_EQ(directed(s("a")), s("a,b"));
  EXPECT_THROW(from_adjacency({{0, 1}, {0}}, g), ValidationError);
  EXPECT_THROW(from_adjacency({{0, 1}}, g), ValidationError);
}

TEST(Identity, NeighborhoodEmpty) {
  const GroundSet g = GroundSet::letters(3);
  const Operator id = identity_operator(g);
  for (Subset y : powerset(g)) {
    EXPECT_EQ(id(y), y);
    EXPECT_TRUE(eta(id, y).empty());
  }
}

TEST(Table, ValidatesSizeAndMembers) {
  const GroundSet g = GroundSet::letters(1);
  EXPECT_THROW(table_operator(g, {Subset()}), ValidationError);
  EXPECT_THROW(table_operator(g, {Subset(), Subset::singleton(1)}), ValidationError);
  EXPECT_THROW(table_operator(GroundSet::letters(17), {}), CapacityError);
}

TEST(Table, LazyLargeGround) {
  // A 20-element extended operator evaluates without building a table.
  const GroundSet g = GroundSet::letters(20);
  std::vector<Subset> singles;
  for (int i = 0; i < 20; ++i) singles.push_back(Subset::singleton(i).with((i + 1) % 20));
  const Operator op = extended_operator(g, singles);
  EXPECT_EQ(op(Subset::singleton(19)), Subset::singleton(19).with(0));
  EXPECT_THROW(op.table(), CapacityError);
}

TEST(Materialize, PointwiseEqual) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Operator op = random_dominating(3, 5, i);
    EXPECT_TRUE(same_operator(op, materialize(op)));
    EXPECT_EQ(to_string(materialize(op).kind()), "table");
  }
}

}  // namespace
}  // namespace domclo
