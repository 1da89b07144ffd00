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

/// @file suite.hpp
/// Built-in reference instances and the full verification suite.

#ifndef DOMCLO_SUITE_HPP
#define DOMCLO_SUITE_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "domclo/category.hpp"
#include "domclo/closure.hpp"
#include "domclo/operators.hpp"
#include "domclo/properties.hpp"
#include "domclo/search.hpp"
#include "domclo/setcore.hpp"
#include "domclo/transforms.hpp"

namespace domclo {

/// a->ac, b->bc, c->cd, d->d extended, except {a,b} -> {a,b,c,d}.
inline Operator example_dominating() {
  const GroundSet g = GroundSet::letters(4);
  auto s = [&](const char* text) { return parse_subset(text, g); };
  return extended_operator(g, {s("a,c"), s("b,c"), s("c,d"), s("d")}, {{s("a,b"), s("a,b,c,d")}});
}

/// a->ab, b->bc, c->c extended; closure and operator do not commute.
inline Operator noncommuting_example() {
  const GroundSet g = GroundSet::letters(3);
  auto s = [&](const char* text) { return parse_subset(text, g); };
  return extended_operator(g, {s("a,b"), s("b,c"), s("c")});
}

/// Ground {p, q, *}: every set gains the star element.
inline Operator star_space(bool empty_maps_to_star) {
  return star_operator(GroundSet({"p", "q", "*"}), 2, empty_maps_to_star);
}

/// Downsets of the two-element chain a < b.
inline Operator chain_downset() { return downset_operator({{0, 1}}, GroundSet::letters(2)); }

/// Two different extended maps on 2^{x,y} that agree on the full set.
inline std::pair<Transformation, Transformation> nonterminal_pair() {
  const GroundSet g({"x", "y"});
  const Subset x = Subset::singleton(0);
  return {Transformation::extended(g, g, {x, Subset()}), Transformation::extended(g, g, {Subset(), x})};
}

struct SuiteEntry {
  std::string name;
  bool passed = true;
  bool informational = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;

  bool passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.passed || e.informational; });
  }
};

/// Baseline class counts for n = 0..4 (closure, antimatroid, matroid,
/// topological); n = 4 only for closure.
inline constexpr std::uint64_t kClosureCounts[] = {1, 2, 7, 61, 2480};
inline constexpr std::uint64_t kAntimatroidCounts[] = {1, 2, 6, 35};
inline constexpr std::uint64_t kMatroidCounts[] = {1, 2, 5, 16};
inline constexpr std::uint64_t kTopologicalCounts[] = {1, 1, 4, 29};

namespace detail {

inline SuiteEntry expect(std::string name, bool ok, std::string detail = {}) {
  return SuiteEntry{std::move(name), ok, false, ok ? std::string() : std::move(detail)};
}

inline std::string profile_mismatch(const PropertyReport& r, bool want, const std::vector<Subset>& witness,
                                    const GroundSet& g) {
  std::string out = r.property + (r.holds ? " holds" : " fails");
  if (!r.holds) {
    out += " with witness";
    for (Subset s : r.witness) out += " " + format_subset(s, g);
  }
  out += want ? "; expected to hold" : "; expected failure at";
  for (Subset s : witness) out += " " + format_subset(s, g);
  return out;
}

inline SuiteEntry expect_profile(std::string name, const PropertyReport& r, bool want,
                                 const std::vector<Subset>& witness, const GroundSet& g) {
  const bool ok = r.holds == want && (want || r.witness == witness);
  return expect(std::move(name), ok, profile_mismatch(r, want, witness, g));
}

// Runs a claim's checker on every operator of a class.
inline SuiteEntry sweep(const std::string& claim_id, int n, OperatorClass c) {
  const Claim& claim = find_claim(claim_id);
  std::uint64_t seen = 0;
  std::optional<std::string> first;
  enumerate_class(n, c, [&](const Operator& op) {
    ++seen;
    if (!first) first = claim.check(single(op));
  });
  SuiteEntry e;
  e.name = claim_id + " over every " + std::string(to_string(c)) + " operator, n=" + std::to_string(n) + " (" +
           std::to_string(seen) + ")";
  e.informational = claim.kind == ClaimKind::conjecture;
  e.passed = !first;
  if (first) e.detail = *first;
  return e;
}

}  // namespace detail

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = 300;
  int n = 4;
};

inline SuiteReport run_reference_suite(const SuiteOptions& options = {}) {
  SuiteReport rep;
  auto push = [&](SuiteEntry e) { rep.entries.push_back(std::move(e)); };

  {
    const Operator d = example_dominating();
    const GroundSet& g = d.ground();
    auto s = [&](const char* text) { return parse_subset(text, g); };
    push(detail::expect_profile("example operator: expansive", is_expansive(d), true, {}, g));
    push(detail::expect_profile("example operator: monotone", is_monotone(d), true, {}, g));
    push(detail::expect_profile("example operator: not extended", is_extended(d), false, {s("a,b")}, g));
    push(detail::expect_profile("example operator: not idempotent", is_idempotent(d), false, {s("a")}, g));
    const SubsetFamily want({s(""), s("a"), s("b"), s("d"), s("c,d"), s("a,c,d"), s("b,c,d"), s("a,b,c,d")});
    const auto closed = closed_sets(dominated_closure(d));
    push(detail::expect("example operator: closed sets of its dominated closure", closed.members() == want.members(),
                        "got " + format_family(closed, g)));
    const Operator eq1 = dominated_closure(d, ClosureEvaluation::subset_union);
    const Operator eq2 = dominated_closure(d, ClosureEvaluation::singleton_test);
    push(detail::expect("example operator: union and singleton closure forms agree", same_operator(eq1, eq2)));
  }
  {
    const Operator d = noncommuting_example();
    const GroundSet& g = d.ground();
    const Operator phi = dominated_closure(d);
    const Subset a = parse_subset("a", g);
    const Subset phi_delta = d(phi(a));
    const Subset delta_phi = phi(d(a));
    push(detail::expect("noncommuting example: {a}.phi.Delta = {a,b}", phi_delta == parse_subset("a,b", g),
                        "got " + format_subset(phi_delta, g)));
    push(detail::expect("noncommuting example: {a}.Delta.phi = {a,b,c}", delta_phi == parse_subset("a,b,c", g),
                        "got " + format_subset(delta_phi, g)));
  }
  for (bool flag : {false, true}) {
    const Operator st = star_space(flag);
    const std::string tag = std::string("star space (empty maps to ") + (flag ? "{*}" : "{}") + "): ";
    push(detail::expect(tag + "closure", is_closure(st).holds));
    push(detail::expect(tag + "antimatroid", is_antimatroid(st).holds));
    push(detail::expect(tag + "pullback property", pullback_property(st).holds));
    push(detail::expect(tag + "uniquely generated", is_uniquely_generated(st).holds));
    const auto gal = is_galois(gamma_map(st), Transformation::from_operator(st));
    push(detail::expect(tag + "gamma and Delta form a Galois pair", gal.holds, gal.detail));
  }
  {
    const Operator ch = chain_downset();
    push(detail::expect("chain downsets: closure", is_closure(ch).holds));
    push(detail::expect("chain downsets: antimatroid", is_antimatroid(ch).holds));
    push(detail::expect("chain downsets: topological", is_topological(ch).holds));
    push(detail::expect("chain downsets: uniquely generated", is_uniquely_generated(ch).holds));
    const auto gal = is_galois(gamma_map(ch), Transformation::from_operator(ch));
    push(detail::expect("chain downsets: gamma and Delta form a Galois pair", gal.holds, gal.detail));
  }
  {
    const auto [f, g] = nonterminal_pair();
    const GroundSet& gr = f.source();
    const Subset x = Subset::singleton(0);
    const bool ok = f(gr.full()) == x && g(gr.full()) == x && !(f == g) && is_monotone_map(f).holds &&
                    is_monotone_map(g).holds;
    push(detail::expect("two distinct monotone maps agree on the full set {x}", ok));
  }

  const std::uint64_t* counts[] = {kClosureCounts, kAntimatroidCounts, kMatroidCounts, kTopologicalCounts};
  const OperatorClass classes[] = {OperatorClass::closure, OperatorClass::antimatroid, OperatorClass::matroid,
                                   OperatorClass::topological};
  for (int k = 0; k < 4; ++k) {
    for (int n = 0; n <= 3; ++n) {
      const auto got = enumerate_class(n, classes[k]);
      push(detail::expect(std::string(to_string(classes[k])) + " count, n=" + std::to_string(n), got == counts[k][n],
                          "got " + std::to_string(got) + ", baseline " + std::to_string(counts[k][n])));
    }
  }
  for (int n = 0; n <= 4; ++n) {
    const auto a = enumerate_class(n, OperatorClass::closure);
    const auto b = closure_count_by_reconstruction(n);
    push(detail::expect("closure count by two routes, n=" + std::to_string(n), a == b && a == kClosureCounts[n],
                        "families " + std::to_string(a) + ", reconstruction " + std::to_string(b)));
  }

  for (const char* id : {"p.CLO.REG", "p.RC", "p.REG.GEN", "p.C.REG", "eq1-eq2-agreement", "p.ANTIMATROID",
                         "p.UGGC", "ug-dominating-idempotent"}) {
    for (int n = 0; n <= kMaxDominatingEnumeration; ++n) push(detail::sweep(id, n, OperatorClass::dominating));
  }
  for (const char* id : {"p.FGEN1", "p.FGEN2", "p.ANTIMATROID", "p.TC", "prop.CC3"}) {
    push(detail::sweep(id, 3, OperatorClass::closure));
  }

  for (const auto& claim : claims()) {
    SearchConfig cfg;
    cfg.seed = options.seed;
    cfg.budget = options.budget;
    cfg.n = std::min(options.n, claim.max_n);
    const auto r = hunt(claim, cfg);
    SuiteEntry e;
    e.name = "search " + claim.id + " (n=" + std::to_string(cfg.n) + ", " + std::to_string(r.tested) + " candidates)";
    e.informational = claim.kind == ClaimKind::conjecture;
    e.passed = !r.found();
    if (r.found()) e.detail = "candidate " + std::to_string(r.counterexample->index) + ": " + r.counterexample->witness;
    push(std::move(e));
  }
  return rep;
}

}  // namespace domclo

#endif  // DOMCLO_SUITE_HPP
