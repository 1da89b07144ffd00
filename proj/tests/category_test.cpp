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

#include "domclo/category.hpp"
#include "domclo/closure.hpp"
#include "domclo/generate.hpp"
#include "domclo/suite.hpp"
#include "oracle.hpp"

namespace domclo {
namespace {

Subset at(const Operator& op, const char* text) { return parse_subset(text, op.ground()); }

TEST(Pullback, Examples) {
  EXPECT_TRUE(pullback_property(star_space(false)).holds);
  EXPECT_TRUE(pullback_property(star_space(true)).holds);
  EXPECT_TRUE(pullback_property(identity_operator(GroundSet::letters(4))).holds);

  const Operator phi = dominated_closure(example_dominating());
  const auto r = pullback_property(phi);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness, (std::vector<Subset>{at(phi, "a,c,d"), at(phi, "a,c"), at(phi, "a,d")}));
  EXPECT_NE(phi(r.witness[1] & r.witness[2]), r.witness[0]);
  EXPECT_EQ(r.per_image.size(), closed_sets(phi).size());
}

TEST(Pullback, RequiresDominating) {
  const GroundSet g = GroundSet::letters(1);
  EXPECT_THROW(pullback_property(table_operator(g, {Subset(), Subset()})), PreconditionError);
}

TEST(Pullback, MatchesOracle) {
  Rng rng(50);
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const Operator d = k % 2 ? random_closure(rng, n) : random_dominating(rng, n, true);
    ASSERT_EQ(pullback_property(d).holds, oracle::pullback(d.ground().labels(), oracle::wrap(d)));
  }
}

TEST(AntimatroidEquivalence, Examples) {
  const auto st = antimatroid_verdicts(star_space(false));
  EXPECT_TRUE(st.pullback && st.closure_antimatroid && st.uniquely_generated);
  const auto d = antimatroid_verdicts(example_dominating());
  EXPECT_FALSE(d.closure_antimatroid);
  EXPECT_FALSE(d.pullback);
  EXPECT_TRUE(antimatroid_equivalence(example_dominating()).holds);
}

TEST(AntimatroidEquivalence, EveryDominatingOperatorUpToTwo) {
  for (int n = 0; n <= 2; ++n) {
    enumerate_class(n, OperatorClass::dominating, [&](const Operator& op) {
      EXPECT_TRUE(antimatroid_equivalence(op).holds) << antimatroid_equivalence(op).detail;
    });
  }
}

TEST(AntimatroidEquivalence, EveryClosureOnThree) {
  enumerate_class(3, OperatorClass::closure, [&](const Operator& op) {
    EXPECT_TRUE(antimatroid_equivalence(op).holds) << antimatroid_equivalence(op).detail;
  });
}

// Antimatroid closures have intersection-closed generator families for
// every image.
TEST(AntimatroidEquivalence, GeneratorFamiliesIntersectionClosed) {
  for (int n = 1; n <= 3; ++n) {
    enumerate_class(n, OperatorClass::antimatroid, [&](const Operator& op) {
      for (Subset z : closed_sets(op)) EXPECT_TRUE(generator_intersection_closed(op, z).holds);
    });
  }
}

TEST(Enumerate, ClosureCountsMatchFamilyOracle) {
  for (int n = 0; n <= 3; ++n) {
    const auto want = oracle::moore_families(GroundSet::letters(n).labels());
    EXPECT_EQ(enumerate_class(n, OperatorClass::closure), static_cast<std::uint64_t>(want)) << n;
    EXPECT_EQ(closure_count_by_reconstruction(n), static_cast<std::uint64_t>(want)) << n;
  }
  EXPECT_EQ(enumerate_class(1, OperatorClass::closure), 2U);
}

TEST(Enumerate, DominatingCountsMatchBruteForce) {
  for (int n = 0; n <= 2; ++n) {
    const GroundSet g = GroundSet::letters(n);
    const auto all = oracle::all_subsets(g.labels());
    const std::size_t k = all.size();
    std::uint64_t brute = 0;
    std::size_t tables = 1;
    for (std::size_t i = 0; i < k; ++i) tables *= k;
    for (std::size_t code = 0; code < tables; ++code) {
      std::map<oracle::LSet, oracle::LSet> table;
      std::size_t c = code;
      for (std::size_t i = 0; i < k; ++i) {
        table[all[i]] = all[c % k];
        c /= k;
      }
      const oracle::Op op = [&](const oracle::LSet& y) { return table.at(y); };
      if (oracle::expansive(g.labels(), op) && oracle::monotone(g.labels(), op)) ++brute;
    }
    EXPECT_EQ(enumerate_class(n, OperatorClass::dominating), brute) << n;
  }
}

TEST(Enumerate, SubclassesByIndependentPredicates) {
  for (int n = 0; n <= 3; ++n) {
    std::uint64_t anti = 0;
    std::uint64_t ug = 0;
    std::uint64_t mat = 0;
    std::uint64_t topo = 0;
    enumerate_class(n, OperatorClass::closure, [&](const Operator& op) {
      const auto& g = op.ground().labels();
      const auto naive = oracle::wrap(op);
      anti += oracle::anti_exchange(g, naive) ? 1 : 0;
      ug += oracle::uniquely_generated(g, naive) ? 1 : 0;
      mat += oracle::exchange(g, naive) ? 1 : 0;
      topo += naive({}).empty() && oracle::extended(g, naive) ? 1 : 0;
    });
    EXPECT_EQ(enumerate_class(n, OperatorClass::antimatroid), anti) << n;
    EXPECT_EQ(anti, ug) << n;
    EXPECT_EQ(enumerate_class(n, OperatorClass::matroid), mat) << n;
    EXPECT_EQ(enumerate_class(n, OperatorClass::topological), topo) << n;
  }
}

TEST(Enumerate, CapacityAndNames) {
  EXPECT_THROW(enumerate_class(3, OperatorClass::dominating), CapacityError);
  EXPECT_THROW(enumerate_class(5, OperatorClass::closure), CapacityError);
  EXPECT_EQ(parse_operator_class("antimatroid"), OperatorClass::antimatroid);
  EXPECT_EQ(to_string(OperatorClass::topological), "topological");
  EXPECT_THROW(parse_operator_class("lattice"), UsageError);
}

}  // namespace
}  // namespace domclo
