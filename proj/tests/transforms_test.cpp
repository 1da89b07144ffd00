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

#include "domclo/closure.hpp"
#include "domclo/generate.hpp"
#include "domclo/suite.hpp"
#include "domclo/transforms.hpp"
#include "oracle.hpp"

namespace domclo {
namespace {

const GroundSet kAB({"a", "b"});
const GroundSet kABC({"a", "b", "c"});

Subset at(const GroundSet& g, const char* text) { return parse_subset(text, g); }

TEST(Transformation, ValidatesTable) {
  EXPECT_THROW(Transformation(kAB, kABC, {Subset()}), ValidationError);
  EXPECT_THROW(Transformation(kAB, kAB, std::vector<Subset>(4, Subset::singleton(2))), ValidationError);
  EXPECT_THROW(Transformation::inclusion(kABC, kAB), ValidationError);
}

TEST(Transformation, EmptySetMayMapAnywhere) {
  const auto f = Transformation::extended(kAB, kABC, {at(kABC, "a"), Subset()}, at(kABC, "c"));
  EXPECT_EQ(f(Subset()), at(kABC, "c"));
  EXPECT_TRUE(f(at(kAB, "b")).empty());
}

TEST(MonotoneMap, Examples) {
  EXPECT_TRUE(is_monotone_map(Transformation::inclusion(kAB, kABC)).holds);
  const auto [f, g] = nonterminal_pair();
  EXPECT_TRUE(is_monotone_map(f).holds);
  EXPECT_TRUE(is_monotone_map(g).holds);
  const GroundSet x({"x"});
  const Transformation bad(kAB, x, {Subset(), Subset::singleton(0), Subset(), Subset()});
  const auto r = is_monotone_map(bad);
  ASSERT_FALSE(r.holds);
  EXPECT_FALSE(bad(r.witness[0]).subset_of(bad(r.witness[1])));
}

TEST(MonotoneMap, MatchesOracle) {
  Rng rng(14);
  for (int k = 0; k < 300; ++k) {
    const GroundSet s = GroundSet::letters(1 + static_cast<int>(rng.below(3)));
    const GroundSet t = GroundSet::letters(1 + static_cast<int>(rng.below(3)));
    std::vector<Subset> images;
    for (std::size_t i = 0; i < s.power_size(); ++i) images.push_back(rng.subset(t.size()));
    const Transformation f(s, t, images);
    const auto naive = oracle::wrap(f);
    bool mono = true;
    for (const auto& a : oracle::all_subsets(s.labels())) {
      for (const auto& b : oracle::all_subsets(s.labels())) {
        if (oracle::within(a, b) && !oracle::within(naive(a), naive(b))) mono = false;
      }
    }
    ASSERT_EQ(is_monotone_map(f).holds, mono);
    // An empty image forces empty images below it.
    if (mono) {
      for (Subset y : powerset(s)) {
        if (!f(y).empty()) continue;
        for (Subset x : powerset(s)) {
          if (x.subset_of(y)) {
            ASSERT_TRUE(f(x).empty());
          }
        }
      }
    }
  }
}

TEST(ComposeMaps, InclusionThenRestriction) {
  const auto inc = Transformation::inclusion(kAB, kABC);
  std::vector<Subset> images(kABC.power_size());
  for (Mask y = 0; y < images.size(); ++y) images[y] = Subset(y) & kAB.full();
  const Transformation back(kABC, kAB, images);
  EXPECT_EQ(compose_maps(inc, back), Transformation::identity(kAB));
  const auto f = Transformation::extended(kAB, kABC, {at(kABC, "a,c"), at(kABC, "b")});
  EXPECT_EQ(compose_maps(f, Transformation::identity(kABC)), f);
  EXPECT_EQ(compose_maps(Transformation::identity(kAB), f), f);
  EXPECT_THROW(compose_maps(f, f), UsageError);
}

TEST(Continuity, Examples) {
  const Operator d = example_dominating();
  const Operator phi = dominated_closure(d);
  EXPECT_TRUE(is_continuous(Transformation::from_operator(d), phi, phi).holds);

  const Operator id = identity_operator(kABC);
  Rng rng(1);
  for (int k = 0; k < 20; ++k) {
    EXPECT_TRUE(is_continuous(random_monotone_map(rng, kABC, kABC), id, id).holds);
  }

  const Operator st = star_space(false);
  const GroundSet& g = st.ground();
  const auto f = Transformation::extended(g, g, {at(g, "q"), at(g, "q"), at(g, "p")});
  const auto r = is_continuous(f, st, st);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness, std::vector<Subset>{at(g, "p")});
  EXPECT_FALSE(f(st(r.witness[0])).subset_of(st(f(r.witness[0]))));
}

TEST(Continuity, MatchesOracle) {
  Rng rng(19);
  for (int k = 0; k < 300; ++k) {
    const GroundSet s = GroundSet::letters(1 + static_cast<int>(rng.below(3)));
    const GroundSet t = GroundSet::letters(1 + static_cast<int>(rng.below(3)));
    const auto f = random_monotone_map(rng, s, t);
    const Operator a = random_dominating(rng, s.size());
    const Operator b = random_dominating(rng, t.size());
    ASSERT_EQ(is_continuous(f, a, b).holds,
              oracle::continuous(s.labels(), oracle::wrap(f), oracle::wrap(a), oracle::wrap(b)));
  }
}

TEST(Preservation, Examples) {
  const Operator phi = dominated_closure(example_dominating());
  EXPECT_TRUE(is_preserving(Transformation::identity(phi.ground()), phi, phi).holds);
  EXPECT_TRUE(is_preserving(Transformation::from_operator(phi), phi, phi).holds);
  EXPECT_TRUE(is_preserving(Transformation::from_operator(phi), phi, phi, PreservationTest::inclusion).holds);
}

// For continuous f the inclusion form and the equality form coincide.
TEST(Preservation, FormsAgreeForContinuousMaps) {
  Rng rng(23);
  int checked = 0;
  for (int k = 0; k < 1000; ++k) {
    const GroundSet s = GroundSet::letters(1 + static_cast<int>(rng.below(3)));
    const GroundSet t = GroundSet::letters(1 + static_cast<int>(rng.below(3)));
    const auto f = random_monotone_map(rng, s, t);
    const Operator a = random_closure(rng, s.size());
    const Operator b = k % 2 ? continuous_lift(f, a) : random_closure(rng, t.size());
    if (!is_continuous(f, a, b).holds) continue;
    ++checked;
    ASSERT_TRUE(preservation_forms_agree(f, a, b).holds) << preservation_forms_agree(f, a, b).detail;
  }
  EXPECT_GT(checked, 100);
}

// Without continuity the inclusion form is strictly weaker: f sends {a} to
// the empty set while the closure of {a} maps onto {a,b}.
TEST(Preservation, InclusionFormWeakerWithoutContinuity) {
  const GroundSet g = GroundSet::letters(2);
  const Operator a = from_family(g, SubsetFamily({Subset(), g.full()}));
  const Operator id = identity_operator(g);
  const Transformation f(g, g, {Subset(), Subset(), Subset::singleton(1), g.full()});
  ASSERT_TRUE(is_monotone_map(f).holds);
  EXPECT_FALSE(is_continuous(f, a, id).holds);
  EXPECT_TRUE(is_preserving(f, a, id, PreservationTest::inclusion).holds);
  const auto eq = is_preserving(f, a, id, PreservationTest::equality);
  ASSERT_FALSE(eq.holds);
  EXPECT_EQ(eq.witness, std::vector<Subset>{Subset::singleton(0)});
  EXPECT_FALSE(preservation_forms_agree(f, a, id).holds);
}

TEST(DeltaSurjective, Examples) {
  const Operator d = example_dominating();
  EXPECT_TRUE(is_delta_surjective(Transformation::identity(d.ground()), d).holds);
  const Transformation zero(d.ground(), d.ground(), std::vector<Subset>(16));
  const auto r = is_delta_surjective(zero, d);
  ASSERT_FALSE(r.holds);
  EXPECT_FALSE(r.witness[0].empty());
}

TEST(DeltaSurjective, CompositionOfSurjectiveContinuousMaps) {
  Rng rng(29);
  int composed = 0;
  for (int k = 0; k < 400 && composed < 50; ++k) {
    const GroundSet s = GroundSet::letters(3);
    const GroundSet t = GroundSet::letters(2);
    const GroundSet u = GroundSet::letters(2);
    const Operator a = random_dominating(rng, 3);
    const auto f = random_extended_map(rng, s, t);
    const auto g = random_extended_map(rng, t, u);
    const Operator b = continuous_lift(f, a);
    const Operator c = continuous_lift(g, b);
    if (!is_delta_surjective(f, b).holds || !is_delta_surjective(g, c).holds) continue;
    ++composed;
    ASSERT_TRUE(is_continuous(compose_maps(f, g), a, c).holds);
    ASSERT_TRUE(is_delta_surjective(compose_maps(f, g), c).holds);
  }
  EXPECT_GT(composed, 0);
}

TEST(GeneratorTransport, Examples) {
  const Operator id2 = identity_operator(kAB);
  const Operator id3 = identity_operator(kABC);
  Rng rng(2);
  for (int k = 0; k < 20; ++k) EXPECT_TRUE(generator_transport(random_monotone_map(rng, kAB, kABC), id2, id3).holds);
  const Operator d = example_dominating();
  const auto self = Transformation::from_operator(d);
  EXPECT_EQ(generator_transport(self, d, d).holds, is_continuous(self, d, d).holds);
}

// Continuity and generator transport agree whenever the target operator is
// a closure; both directions are exercised by lifted and unrelated targets.
TEST(GeneratorTransport, AgreesWithContinuityForClosureTargets) {
  Rng rng(37);
  int both = 0;
  int neither = 0;
  for (int k = 0; k < 2000; ++k) {
    const GroundSet s = GroundSet::letters(1 + static_cast<int>(rng.below(3)));
    const GroundSet t = GroundSet::letters(1 + static_cast<int>(rng.below(3)));
    const auto f = random_monotone_map(rng, s, t);
    const Operator a = random_closure(rng, s.size());
    const Operator b = k % 2 ? materialize(dominated_closure(continuous_lift(f, a))) : random_closure(rng, t.size());
    if (!is_closure(b).holds) continue;
    const bool cont = is_continuous(f, a, b).holds;
    ASSERT_EQ(cont, generator_transport(f, a, b).holds) << k;
    (cont ? both : neither) += 1;
  }
  EXPECT_GT(both, 0);
  EXPECT_GT(neither, 0);
}

TEST(Galois, InclusionRestriction) {
  const auto inc = Transformation::inclusion(kAB, kABC);
  const auto res = right_adjoint(inc);
  for (Subset y : powerset(kABC)) EXPECT_EQ(res(y), y & kAB.full());
  const auto r = is_galois(inc, res);
  EXPECT_TRUE(r.holds) << r.detail;
  EXPECT_TRUE(galois_adjunction(inc, res).holds);
  const auto pair = make_galois_pair(inc, res);
  EXPECT_TRUE(same_operator(galois_closure(pair), identity_operator(kAB)));
  EXPECT_TRUE(galois_identities(pair).holds);
  EXPECT_TRUE(galois_unique_adjoint(inc, res).holds);
}

TEST(Galois, IdentityPair) {
  const auto id = Transformation::identity(kAB);
  EXPECT_TRUE(is_galois(id, id).holds);
  const auto pair = make_galois_pair(id, id);
  EXPECT_TRUE(same_operator(galois_closure(pair), identity_operator(kAB)));
  EXPECT_TRUE(galois_identities(pair).holds);
  const GroundSet one({"a"});
  const auto id1 = Transformation::identity(one);
  EXPECT_TRUE(galois_unique_adjoint(id1, id1).holds);
  const auto composed = compose_galois(pair, pair);
  EXPECT_EQ(composed.f, id);
  EXPECT_EQ(composed.g, id);
}

TEST(Galois, StarClosureWithIdentityFails) {
  const Operator st = star_space(false);
  const auto f = Transformation::from_operator(st);
  const auto g = Transformation::identity(st.ground());
  const auto r = is_galois(f, g);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness, std::vector<Subset>{at(st.ground(), "p")});
  EXPECT_THROW(make_galois_pair(f, g), PreconditionError);
  EXPECT_THROW(galois_closure(GaloisPair{f, g}), PreconditionError);
}

TEST(Galois, ChainedInclusions) {
  const GroundSet a({"a"});
  const auto first = make_galois_pair(Transformation::inclusion(a, kAB), right_adjoint(Transformation::inclusion(a, kAB)));
  const auto second =
      make_galois_pair(Transformation::inclusion(kAB, kABC), right_adjoint(Transformation::inclusion(kAB, kABC)));
  const auto both = compose_galois(first, second);
  EXPECT_EQ(both.f, Transformation::inclusion(a, kABC));
  EXPECT_TRUE(is_galois(both.f, both.g).holds);
}

TEST(Galois, RandomPairsSatisfyIdentitiesAndClosure) {
  Rng rng(43);
  for (int k = 0; k < 300; ++k) {
    const GroundSet s = GroundSet::letters(static_cast<int>(rng.below(5)));
    const GroundSet t = GroundSet::letters(static_cast<int>(rng.below(5)));
    const auto f = random_extended_map(rng, s, t);
    const auto pair = make_galois_pair(f, right_adjoint(f));
    ASSERT_TRUE(galois_identities(pair).holds);
    ASSERT_TRUE(is_closure(galois_closure(pair)).holds);
  }
}

TEST(Galois, AdjointUniqueOnTinyGrounds) {
  for (int ns = 0; ns <= 2; ++ns) {
    for (int nt = 0; nt <= 2; ++nt) {
      const GroundSet s = GroundSet::letters(ns);
      const GroundSet t = GroundSet::letters(nt);
      int pairs = 0;
      for (const auto& f : monotone_maps(s, t)) {
        for (const auto& g : monotone_maps(t, s)) {
          if (!is_galois(f, g).holds) continue;
          ++pairs;
          ASSERT_TRUE(galois_unique_adjoint(f, g).holds);
          ASSERT_EQ(g, right_adjoint(f));
        }
      }
      EXPECT_GT(pairs, 0);
    }
  }
  EXPECT_THROW(monotone_maps(GroundSet::letters(4), kAB), CapacityError);
}

TEST(Galois, MonotoneMapCounts) {
  // Monotone Boolean functions: 1, 3, 6, 20 on 0..3 inputs, raised to |T|.
  EXPECT_EQ(monotone_maps(GroundSet::letters(0), GroundSet::letters(1)).size(), 2U);
  EXPECT_EQ(monotone_maps(GroundSet::letters(1), GroundSet::letters(1)).size(), 3U);
  EXPECT_EQ(monotone_maps(GroundSet::letters(2), GroundSet::letters(1)).size(), 6U);
  EXPECT_EQ(monotone_maps(GroundSet::letters(3), GroundSet::letters(1)).size(), 20U);
  EXPECT_EQ(monotone_maps(GroundSet::letters(2), GroundSet::letters(2)).size(), 36U);
}

TEST(Gamma, StarSpaceFormsGaloisPair) {
  for (bool flag : {false, true}) {
    const Operator st = star_space(flag);
    const auto gm = gamma_map(st);
    EXPECT_EQ(gm(at(st.ground(), "p,*")), at(st.ground(), "p"));
    EXPECT_TRUE(gamma_delta_conditions(st).holds);
  }
  const auto r = is_galois(gamma_map(star_space(true)), Transformation::from_operator(star_space(true)));
  EXPECT_TRUE(r.holds) << r.detail;
}

// Without the empty image fixed at {*}, the empty set and {*} are distinct
// minimal generators-of-themselves, and gamma fails monotonicity at {*}.
TEST(Gamma, StarSpaceWithoutEmptyFlagIsNotGalois) {
  const Operator st = star_space(false);
  const auto gm = gamma_map(st);
  EXPECT_EQ(gm(at(st.ground(), "*")), at(st.ground(), "*"));
  EXPECT_EQ(gm(at(st.ground(), "p,*")), at(st.ground(), "p"));
  EXPECT_FALSE(is_monotone_map(gm).holds);
  EXPECT_FALSE(is_galois(gm, Transformation::from_operator(st)).holds);
}

TEST(Gamma, ChainDownsetsNotMonotone) {
  const Operator ch = chain_downset();
  ASSERT_TRUE(is_uniquely_generated(ch).holds);
  const auto gm = gamma_map(ch);
  EXPECT_EQ(gm(at(ch.ground(), "a")), at(ch.ground(), "a"));
  EXPECT_EQ(gm(at(ch.ground(), "a,b")), at(ch.ground(), "b"));
  EXPECT_FALSE(is_monotone_map(gm).holds);
}

TEST(Gamma, NotAFunction) {
  const Operator phi = dominated_closure(example_dominating());
  try {
    gamma_map(phi);
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("gamma is not a function"), std::string::npos);
  }
}

// Minimal generators X, Z of a common image: X.Delta.gamma picks a set not
// inside X, so Delta followed by a choice of minimal generator is not
// contractive.
TEST(Gamma, NonUniqueGeneratorsBreakContractivity) {
  const Operator phi = dominated_closure(example_dominating());
  const GroundSet& g = phi.ground();
  const Subset x = at(g, "a,d");
  const auto mins = gamma(phi, x);
  ASSERT_EQ(mins, SubsetFamily({at(g, "a,c"), at(g, "a,d")}));
  EXPECT_FALSE(mins[0].subset_of(x));
  EXPECT_EQ(mins[0] | x, at(g, "a,c,d"));
}

}  // namespace
}  // namespace domclo
