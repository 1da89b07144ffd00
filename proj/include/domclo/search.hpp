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

/// @file search.hpp
/// Counterexample hunting over seeded candidate streams.
///
/// A claim pairs a candidate generator with a checker. Candidate i is drawn
/// from Rng(seed, i), so the stream does not depend on how indices are split
/// across workers, and the reported counterexample is always the one with
/// the lowest index.

#ifndef DOMCLO_SEARCH_HPP
#define DOMCLO_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "domclo/category.hpp"
#include "domclo/closure.hpp"
#include "domclo/error.hpp"
#include "domclo/generate.hpp"
#include "domclo/io.hpp"
#include "domclo/operators.hpp"
#include "domclo/properties.hpp"
#include "domclo/transforms.hpp"

namespace domclo {

/// A chain of systems: ops[i] lives on the i-th ground set and maps[i] goes
/// from ground i to ground (i + 1) mod k.
struct Instance {
  std::vector<Operator> ops;
  std::vector<Transformation> maps;
};

inline Json instance_to_json(const Instance& inst) {
  Json systems = Json::array();
  for (std::size_t i = 0; i < inst.ops.size(); ++i) {
    systems.push_back(system_to_json(inst.ops[i], i < inst.maps.size() ? &inst.maps[i] : nullptr));
  }
  Json doc = Json::object();
  doc["systems"] = systems;
  return doc;
}

inline Instance instance_from_json(const Json& doc) {
  const Json& systems = detail::field(doc, "", "systems");
  if (!systems.is_array() || systems.empty()) detail::bad("systems", "expected a non-empty array of documents");
  std::vector<SystemDocument> docs;
  for (const auto& s : systems) docs.push_back(system_from_json(s));
  Instance inst;
  for (const auto& d : docs) inst.ops.push_back(d.op);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (!docs[i].map) break;
    inst.maps.push_back(map_from_json(*docs[i].map, docs[i].ground, docs[(i + 1) % docs.size()].ground));
  }
  return inst;
}

enum class ClaimKind { proposition, conjecture };

inline std::string_view to_string(ClaimKind k) { return k == ClaimKind::proposition ? "proposition" : "conjecture"; }

struct Claim {
  std::string id;
  ClaimKind kind = ClaimKind::proposition;
  std::string statement;
  int max_n = kMaxRandomSize;
  std::function<Instance(Rng&, int)> generate;
  /// Empty when the instance satisfies the claim (or misses its hypotheses);
  /// otherwise a description of the violation.
  std::function<std::optional<std::string>(const Instance&)> check;
};

namespace detail {

using Verdict = std::optional<std::string>;

inline Verdict failed(const PropertyReport& r) {
  if (r) return std::nullopt;
  return r.property + ": " + r.detail;
}

inline void need_shape(const Instance& inst, std::size_t ops, std::size_t maps) {
  if (inst.ops.size() != ops || inst.maps.size() != maps) {
    throw ValidationError("instance needs " + std::to_string(ops) + " systems and " + std::to_string(maps) + " maps");
  }
}

inline Instance single(Operator op) { return Instance{{std::move(op)}, {}}; }

inline int pick_size(Rng& rng, int n) { return n <= 1 ? n : 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))); }

// Dominating operators with a bias toward closures and antimatroids, so the
// equivalences see both verdicts.
inline Operator mixed_dominating(Rng& rng, int n) {
  switch (rng.below(8)) {
    case 0:
    case 1: return random_closure(rng, n);
    case 2: return random_downset(rng, n);
    default: return random_dominating(rng, n);
  }
}

inline Operator random_extended_operator(Rng& rng, int n) {
  std::vector<Subset> singles;
  for (int i = 0; i < n; ++i) singles.push_back(rng.sparse_subset(n, 1, 2));
  return materialize(extended_operator(GroundSet::letters(n), singles));
}

// S -> S' monotone, continuous for the dominating operators it carries.
inline Instance continuous_pair(Rng& rng, int n, bool lift) {
  const GroundSet s = GroundSet::letters(n);
  const GroundSet t = GroundSet::letters(pick_size(rng, n));
  Operator delta = random_dominating(rng, n);
  Transformation f = random_monotone_map(rng, s, t);
  Operator extra = random_dominating(rng, t.size());
  Operator target = lift ? continuous_lift(f, delta, rng.chance(1, 2) ? &extra : nullptr) : extra;
  // The second map closes the chain back to S; it is never inspected.
  Transformation back(t, s, std::vector<Subset>(t.power_size()));
  return Instance{{delta, target}, {f, back}};
}

// f surjective onto every subset of the target: identity on the shared
// letters plus a monotone contribution from the extra ones.
inline Transformation surjective_map(Rng& rng, const GroundSet& s, const GroundSet& t) {
  std::vector<Subset> singles;
  for (int i = 0; i < s.size(); ++i) {
    singles.push_back(i < t.size() ? Subset::singleton(i) : rng.sparse_subset(t.size(), 1, 2));
  }
  return Transformation::extended(s, t, singles);
}

inline Transformation maybe_surjective_map(Rng& rng, const GroundSet& s, const GroundSet& t) {
  return rng.chance(1, 2) ? surjective_map(rng, s, t) : random_monotone_map(rng, s, t);
}

inline Transformation dummy_map(const GroundSet& s, const GroundSet& t) {
  return Transformation(s, t, std::vector<Subset>(s.power_size()));
}

inline GaloisPair random_galois_pair(Rng& rng, const GroundSet& s, const GroundSet& t) {
  Transformation f = random_extended_map(rng, s, t);
  Transformation g = right_adjoint(f);
  return {std::move(f), std::move(g)};
}

inline bool continuous(const Transformation& f, const Operator& a, const Operator& b) {
  return is_continuous(f, a, b).holds;
}

inline bool monotone(const Transformation& f) { return is_monotone_map(f).holds; }

// Union-closed generator families for every image value.
inline PropertyReport generator_union_closed(const Operator& delta) {
  PropertyReport r;
  r.property = "generator-union-closed";
  const auto& g = delta.ground();
  const auto table = delta.table();
  for (Subset x : powerset(g)) {
    for (Subset y : powerset(g)) {
      if (table[x.bits()] != table[y.bits()]) continue;
      ++r.checked;
      if (table[(x | y).bits()] != table[x.bits()]) {
        fail(r, {x, y},
             format_subset(x, g) + " and " + format_subset(y, g) + " generate " + format_subset(table[x.bits()], g) +
                 " but their union generates " + format_subset(table[(x | y).bits()], g));
        return r;
      }
    }
  }
  return r;
}

inline std::vector<Claim> build_claims() {
  std::vector<Claim> out;
  auto add = [&](std::string id, ClaimKind kind, std::string statement, int max_n,
                 std::function<Instance(Rng&, int)> gen, std::function<Verdict(const Instance&)> check) {
    out.push_back(Claim{std::move(id), kind, std::move(statement), max_n, std::move(gen), std::move(check)});
  };
  const auto P = ClaimKind::proposition;
  auto gen_extended = [](Rng& rng, int n) { return single(random_extended_operator(rng, n)); };
  auto gen_dominating = [](Rng& rng, int n) { return single(random_dominating(rng, n)); };
  auto gen_mixed = [](Rng& rng, int n) { return single(mixed_dominating(rng, n)); };
  auto gen_closure = [](Rng& rng, int n) {
    return single(rng.chance(1, 3) ? random_downset(rng, n) : random_closure(rng, n));
  };

  add("p.EX1", P, "extended: every z in Y.a lies in {y}.a for some y in Y", kMaxRandomSize, gen_extended,
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 1, 0);
        const auto& op = inst.ops[0];
        if (!is_extended(op)) return std::nullopt;
        const auto& g = op.ground();
        for (Subset y : powerset(g)) {
          Subset reach;
          y.for_each_element([&](int e) { reach = reach | op(Subset::singleton(e)); });
          const Subset orphan = op(y) - reach;
          if (!orphan.empty()) return "Y=" + format_subset(y, g) + ": " + format_subset(orphan, g) + " has no source";
        }
        return std::nullopt;
      });
  add("c.EX2", P, "extended operators are monotone", kMaxRandomSize, gen_extended, [](const Instance& inst) -> Verdict {
    need_shape(inst, 1, 0);
    if (!is_extended(inst.ops[0])) return std::nullopt;
    return failed(is_monotone(inst.ops[0]));
  });
  add("c.EX3", P, "extended operators map the empty set to itself", kMaxRandomSize, gen_extended,
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 1, 0);
        const auto& op = inst.ops[0];
        if (!is_extended(op) || op(Subset()).empty()) return std::nullopt;
        return "empty set maps to " + format_subset(op(Subset()), op.ground());
      });
  add("p.TC", P, "idempotent dominating: y in X.phi implies {y}.eta within X.Delta", kMaxRandomSize, gen_closure,
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 1, 0);
        const auto& op = inst.ops[0];
        if (!is_dominating(op) || !is_idempotent(op)) return std::nullopt;
        return failed(is_transitively_closed(op));
      });
  add("prop.CC3", P, "expansive: closure iff path independent", 6,
      [](Rng& rng, int n) {
        switch (rng.below(4)) {
          case 0:
          case 1: return single(random_closure(rng, n));
          case 2: return single(random_dominating(rng, n));
          default: return single(random_expansive(rng, n));
        }
      },
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 1, 0);
        const auto& op = inst.ops[0];
        if (!is_expansive(op)) return std::nullopt;
        const auto c = is_closure(op);
        const auto p = is_path_independent(op);
        if (c.holds == p.holds) return std::nullopt;
        return std::string("closure=") + (c.holds ? "true" : "false") + ", path-independent=" +
               (p.holds ? "true" : "false") + "; " + (c.holds ? p.detail : c.detail);
      });
  add("p.FGEN1", P, "antimatroid closure: generators of a closed set are intersection-closed", kMaxRandomSize,
      gen_closure, [](const Instance& inst) -> Verdict {
        need_shape(inst, 1, 0);
        const auto& op = inst.ops[0];
        if (!is_closure(op) || !is_antimatroid(op)) return std::nullopt;
        for (Subset z : powerset(op.ground())) {
          if (op(z) != z) continue;
          if (auto v = failed(generator_intersection_closed(op, z))) return v;
        }
        return std::nullopt;
      });
  add("p.FGEN2", P, "closure: antimatroid iff uniquely generated", kMaxRandomSize, gen_closure,
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 1, 0);
        const auto& op = inst.ops[0];
        if (!is_closure(op)) return std::nullopt;
        const auto a = is_antimatroid(op);
        const auto u = is_uniquely_generated(op);
        if (a.holds == u.holds) return std::nullopt;
        return std::string("antimatroid=") + (a.holds ? "true" : "false") + ", uniquely-generated=" +
               (u.holds ? "true" : "false") + "; " + (a.holds ? u.detail : a.detail);
      });
  add("p.RC", P, "dominated closures are closures, and every closure is its own dominated closure", kMaxRandomSize,
      gen_mixed, [](const Instance& inst) -> Verdict {
        need_shape(inst, 1, 0);
        const auto& delta = inst.ops[0];
        if (!is_dominating(delta)) return std::nullopt;
        const Operator phi = materialize(dominated_closure(delta));
        if (auto v = failed(is_closure(phi))) return "dominated closure is not a closure; " + *v;
        const Operator again = dominated_closure(phi);
        for (Subset y : powerset(phi.ground())) {
          if (again(y) != phi(y)) return "closure " + format_subset(y, phi.ground()) + " is not reproduced";
        }
        return std::nullopt;
      });
  add("p.CLO.REG", P, "Y.phi.Delta = Y.Delta", kMaxRandomSize, gen_dominating, [](const Instance& inst) -> Verdict {
    need_shape(inst, 1, 0);
    const auto& delta = inst.ops[0];
    if (!is_dominating(delta)) return std::nullopt;
    const Operator phi = dominated_closure(delta);
    for (Subset y : powerset(delta.ground())) {
      if (delta(phi(y)) != delta(y)) {
        const auto& g = delta.ground();
        return "Y=" + format_subset(y, g) + ": Y.phi.Delta = " + format_subset(delta(phi(y)), g) +
               " but Y.Delta = " + format_subset(delta(y), g);
      }
    }
    return std::nullopt;
  });
  add("p.REG.GEN", P, "X.Delta = Y.Delta iff X.phi = Y.phi", kMaxRandomSize, gen_dominating,
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 1, 0);
        const auto& delta = inst.ops[0];
        if (!is_dominating(delta)) return std::nullopt;
        const Operator phi = dominated_closure(delta);
        const auto& g = delta.ground();
        // Two partitions agree iff each class of one maps to a single class
        // of the other, in both directions.
        std::vector<Mask> to_phi(g.power_size(), kUnfilled);
        std::vector<Mask> to_delta(g.power_size(), kUnfilled);
        for (Subset x : powerset(g)) {
          const Mask d = delta(x).bits();
          const Mask p = phi(x).bits();
          if (to_phi[d] == kUnfilled) to_phi[d] = p;
          if (to_delta[p] == kUnfilled) to_delta[p] = d;
          if (to_phi[d] != p || to_delta[p] != d) {
            return "X=" + format_subset(x, g) + " splits the generator classes of Delta and phi";
          }
        }
        return std::nullopt;
      });
  add("p.C.REG", P, "dominating: closure iff X within Y.Delta implies X.Delta within Y.Delta", kMaxRandomSize,
      gen_mixed, [](const Instance& inst) -> Verdict {
        need_shape(inst, 1, 0);
        const auto& delta = inst.ops[0];
        if (!is_dominating(delta)) return std::nullopt;
        const auto c = is_closure(delta);
        const auto s = is_region_stable(delta);
        if (c.holds == s.holds) return std::nullopt;
        return std::string("closure=") + (c.holds ? "true" : "false") + ", region-stable=" +
               (s.holds ? "true" : "false");
      });
  add("eq1-eq2-agreement", P, "union and singleton evaluations of the dominated closure agree", kMaxRandomSize,
      [](Rng& rng, int n) { return single(random_dominating(rng, n, rng.chance(1, 4))); },
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 1, 0);
        const auto& delta = inst.ops[0];
        if (!is_dominating(delta)) return std::nullopt;
        const Operator a = dominated_closure(delta, ClosureEvaluation::subset_union);
        const Operator b = dominated_closure(delta, ClosureEvaluation::singleton_test);
        const auto& g = delta.ground();
        for (Subset y : powerset(g)) {
          if (a(y) != b(y)) {
            return "Y=" + format_subset(y, g) + ": union form " + format_subset(a(y), g) + ", singleton form " +
                   format_subset(b(y), g);
          }
        }
        return std::nullopt;
      });
  add("p.MONOTONE", P, "composites of monotone maps are monotone", kMaxRandomSize,
      [](Rng& rng, int n) {
        const GroundSet s = GroundSet::letters(n);
        const GroundSet t = GroundSet::letters(pick_size(rng, n));
        const GroundSet u = GroundSet::letters(pick_size(rng, n));
        auto f = random_monotone_map(rng, s, t);
        auto g = random_monotone_map(rng, t, u);
        return Instance{{identity_operator(s), identity_operator(t), identity_operator(u)}, {f, g, dummy_map(u, s)}};
      },
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 3, 3);
        if (!monotone(inst.maps[0]) || !monotone(inst.maps[1])) return std::nullopt;
        return failed(is_monotone_map(compose_maps(inst.maps[0], inst.maps[1])));
      });
  add("p.COP", P, "composites of monotone continuous maps are continuous", 6,
      [](Rng& rng, int n) {
        const GroundSet s = GroundSet::letters(n);
        const GroundSet t = GroundSet::letters(pick_size(rng, n));
        const GroundSet u = GroundSet::letters(pick_size(rng, n));
        Operator a = random_dominating(rng, n);
        auto f = random_monotone_map(rng, s, t);
        Operator b = continuous_lift(f, a);
        auto g = random_monotone_map(rng, t, u);
        Operator extra = random_dominating(rng, u.size());
        Operator c = continuous_lift(g, b, rng.chance(1, 2) ? &extra : nullptr);
        return Instance{{a, b, c}, {f, g, dummy_map(u, s)}};
      },
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 3, 3);
        const auto& [a, b, c] = std::tie(inst.ops[0], inst.ops[1], inst.ops[2]);
        const auto& f = inst.maps[0];
        const auto& g = inst.maps[1];
        if (!is_monotone(a) || !is_monotone(b) || !is_monotone(c)) return std::nullopt;
        if (!monotone(f) || !monotone(g) || !continuous(f, a, b) || !continuous(g, b, c)) return std::nullopt;
        return failed(is_continuous(compose_maps(f, g), a, c));
      });
  add("p.IC4", P, "monotone f: continuous iff equal regions have equal target regions", 6,
      [](Rng& rng, int n) { return continuous_pair(rng, n, rng.chance(1, 2)); },
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 2, 2);
        const auto& f = inst.maps[0];
        const auto& d = inst.ops[0];
        const auto& d2 = inst.ops[1];
        if (!is_dominating(d) || !is_dominating(d2) || !monotone(f)) return std::nullopt;
        const auto c = is_continuous(f, d, d2);
        const auto t = generator_transport(f, d, d2);
        if (c.holds == t.holds) return std::nullopt;
        return std::string("continuous=") + (c.holds ? "true" : "false") + ", transport=" +
               (t.holds ? "true" : "false") + "; " + (c.holds ? t.detail : c.detail);
      });
  add("p.IC2", P, "monotone, continuous, surjective: every Delta'-set is the image of a Delta-set", 6,
      [](Rng& rng, int n) {
        const GroundSet s = GroundSet::letters(n);
        const GroundSet t = GroundSet::letters(pick_size(rng, n));
        Operator d = random_dominating(rng, n);
        auto f = maybe_surjective_map(rng, s, t);
        Operator extra = random_dominating(rng, t.size());
        Operator d2 = continuous_lift(f, d, rng.chance(1, 2) ? &extra : nullptr);
        return Instance{{d, d2}, {f, dummy_map(t, s)}};
      },
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 2, 2);
        const auto& f = inst.maps[0];
        const auto& d = inst.ops[0];
        const auto& d2 = inst.ops[1];
        if (!is_dominating(d) || !is_dominating(d2) || !monotone(f)) return std::nullopt;
        if (!continuous(f, d, d2) || !is_delta_surjective(f, d2)) return std::nullopt;
        return failed(has_delta_set_preimages(f, d, d2));
      });
  add("p.COMP.SUR", P, "composites of monotone, continuous, surjective maps are surjective", 6,
      [](Rng& rng, int n) {
        const GroundSet s = GroundSet::letters(n);
        const GroundSet t = GroundSet::letters(pick_size(rng, n));
        const GroundSet u = GroundSet::letters(pick_size(rng, t.size()));
        Operator a = random_dominating(rng, n);
        auto f = maybe_surjective_map(rng, s, t);
        Operator b = continuous_lift(f, a);
        auto g = maybe_surjective_map(rng, t, u);
        Operator extra = random_dominating(rng, u.size());
        Operator c = continuous_lift(g, b, rng.chance(1, 2) ? &extra : nullptr);
        return Instance{{a, b, c}, {f, g, dummy_map(u, s)}};
      },
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 3, 3);
        const auto& f = inst.maps[0];
        const auto& g = inst.maps[1];
        const auto& [a, b, c] = std::tie(inst.ops[0], inst.ops[1], inst.ops[2]);
        if (!is_dominating(a) || !is_dominating(b) || !is_dominating(c)) return std::nullopt;
        if (!monotone(f) || !monotone(g) || !continuous(f, a, b) || !continuous(g, b, c)) return std::nullopt;
        if (!is_delta_surjective(f, b) || !is_delta_surjective(g, c)) return std::nullopt;
        return failed(is_delta_surjective(compose_maps(f, g), c));
      });
  add("p.AP", P, "monotone f: preserving iff Y.f.Delta' within Y.Delta.f", 6,
      [](Rng& rng, int n) { return continuous_pair(rng, n, rng.chance(1, 2)); },
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 2, 2);
        const auto& f = inst.maps[0];
        if (!is_dominating(inst.ops[0]) || !is_dominating(inst.ops[1]) || !monotone(f)) return std::nullopt;
        return failed(preservation_forms_agree(f, inst.ops[0], inst.ops[1]));
      });
  add("c.AP", P, "monotone f: continuous and preserving iff Y.Delta.f = Y.f.Delta'", 6,
      [](Rng& rng, int n) { return continuous_pair(rng, n, rng.chance(1, 2)); },
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 2, 2);
        const auto& f = inst.maps[0];
        const auto& d = inst.ops[0];
        const auto& d2 = inst.ops[1];
        if (!is_dominating(d) || !is_dominating(d2) || !monotone(f)) return std::nullopt;
        const bool both = continuous(f, d, d2) && is_preserving(f, d, d2).holds;
        const bool eq = is_preserving(f, d, d2, PreservationTest::equality).holds;
        if (both == eq) return std::nullopt;
        return std::string("continuous and preserving=") + (both ? "true" : "false") + ", equality=" +
               (eq ? "true" : "false");
      });

  auto gen_pair = [](Rng& rng, int n) {
    const GroundSet s = GroundSet::letters(n);
    const GroundSet t = GroundSet::letters(pick_size(rng, n));
    if (rng.chance(1, 2)) {
      auto p = random_galois_pair(rng, s, t);
      return Instance{{identity_operator(s), identity_operator(t)}, {p.f, p.g}};
    }
    return Instance{{identity_operator(s), identity_operator(t)},
                    {random_monotone_map(rng, s, t), random_monotone_map(rng, t, s)}};
  };
  auto pair_of = [](const Instance& inst) -> std::optional<GaloisPair> {
    need_shape(inst, 2, 2);
    if (!is_galois(inst.maps[0], inst.maps[1])) return std::nullopt;
    return GaloisPair{inst.maps[0], inst.maps[1]};
  };
  add("p.GC1", P, "monotone pair: Galois axioms iff X.f within Y' exactly when X within Y'.g", 6, gen_pair,
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 2, 2);
        if (!monotone(inst.maps[0]) || !monotone(inst.maps[1])) return std::nullopt;
        try {
          (void)is_galois(inst.maps[0], inst.maps[1]);
        } catch (const std::logic_error& e) {
          return std::string(e.what());
        }
        return std::nullopt;
      });
  add("p.GC2", P, "Galois adjoints determine each other", 3, gen_pair, [pair_of](const Instance& inst) -> Verdict {
    auto p = pair_of(inst);
    if (!p) return std::nullopt;
    return failed(galois_unique_adjoint(p->f, p->g));
  });
  add("p.GC3", P, "Galois pair: f.g.f = f and g.f.g = g", 6, gen_pair, [pair_of](const Instance& inst) -> Verdict {
    auto p = pair_of(inst);
    if (!p) return std::nullopt;
    return failed(galois_identities(*p));
  });
  add("c.GC4", P, "Galois pair: f.g is a closure", 6, gen_pair, [pair_of](const Instance& inst) -> Verdict {
    auto p = pair_of(inst);
    if (!p) return std::nullopt;
    return failed(is_closure(galois_closure(*p)));
  });
  add("p.GC5", P, "composites of Galois pairs are Galois", 6,
      [](Rng& rng, int n) {
        const GroundSet s = GroundSet::letters(n);
        const GroundSet t = GroundSet::letters(pick_size(rng, n));
        const GroundSet u = GroundSet::letters(pick_size(rng, n));
        auto p = random_galois_pair(rng, s, t);
        auto q = random_galois_pair(rng, t, u);
        return Instance{{identity_operator(s), identity_operator(t), identity_operator(u)},
                        {p.f, q.f, compose_maps(q.g, p.g)}};
      },
      [](const Instance& inst) -> Verdict {
        // Stored: f, h and the composite adjoint k.g. A left adjoint fixes
        // its right adjoint, so g and k are recovered from f and h.
        need_shape(inst, 3, 3);
        const auto& f = inst.maps[0];
        const auto& h = inst.maps[1];
        const auto& kg = inst.maps[2];
        const Transformation g = right_adjoint(f);
        const Transformation k = right_adjoint(h);
        if (!is_galois(f, g) || !is_galois(h, k)) return std::nullopt;
        if (!(compose_maps(k, g) == kg)) return std::nullopt;
        return failed(is_galois(compose_maps(f, h), kg));
      });
  add("p.UGGC", P, "uniquely generated: gamma and Delta form a Galois pair", kMaxRandomSize, gen_mixed,
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 1, 0);
        const auto& delta = inst.ops[0];
        if (!is_dominating(delta) || !is_uniquely_generated(delta)) return std::nullopt;
        try {
          const Transformation gm = gamma_map(delta);
          return failed(is_galois(gm, Transformation::from_operator(delta)));
        } catch (const PreconditionError& e) {
          return std::string(e.what());
        }
      });
  add("p.ANTIMATROID", P, "dominating: pullback property iff antimatroid closure (iff uniquely generated)",
      kMaxRandomSize, gen_mixed, [](const Instance& inst) -> Verdict {
        need_shape(inst, 1, 0);
        if (!is_dominating(inst.ops[0])) return std::nullopt;
        return failed(antimatroid_equivalence(inst.ops[0]));
      });
  add("ug-dominating-idempotent", ClaimKind::conjecture, "uniquely generated dominating operators are idempotent",
      kMaxRandomSize, gen_mixed, [](const Instance& inst) -> Verdict {
        need_shape(inst, 1, 0);
        const auto& delta = inst.ops[0];
        if (!is_dominating(delta) || !is_uniquely_generated(delta)) return std::nullopt;
        return failed(is_idempotent(delta));
      });
  add("matroid-pushout", ClaimKind::conjecture,
      "dominating: union-closed generator families iff matroid closure", 6, gen_mixed,
      [](const Instance& inst) -> Verdict {
        need_shape(inst, 1, 0);
        const auto& delta = inst.ops[0];
        if (!is_dominating(delta)) return std::nullopt;
        const bool pushout = generator_union_closed(delta).holds;
        const bool matroid = is_closure(delta).holds && is_matroid(delta).holds;
        if (pushout == matroid) return std::nullopt;
        return std::string("union-closed=") + (pushout ? "true" : "false") + ", matroid closure=" +
               (matroid ? "true" : "false");
      });
  return out;
}

}  // namespace detail

inline const std::vector<Claim>& claims() {
  static const std::vector<Claim> registry = detail::build_claims();
  return registry;
}

inline const Claim& find_claim(std::string_view id) {
  for (const auto& c : claims()) {
    if (c.id == id) return c;
  }
  throw UsageError("unknown claim '" + std::string(id) + "'");
}

struct SearchConfig {
  std::uint64_t seed = 0;
  int n = 4;
  std::uint64_t budget = 1000;
  unsigned workers = 1;
};

struct Counterexample {
  std::uint64_t index = 0;
  std::string witness;
  Json instance;
};

struct ClaimResult {
  std::string claim;
  ClaimKind kind = ClaimKind::proposition;
  std::uint64_t seed = 0;
  int n = 0;
  std::uint64_t budget = 0;
  std::uint64_t tested = 0;
  std::optional<Counterexample> counterexample;

  bool found() const { return counterexample.has_value(); }
};

/// Candidate i of a claim's stream.
inline Instance candidate(const Claim& claim, std::uint64_t seed, int n, std::uint64_t index) {
  Rng rng(seed, index);
  return claim.generate(rng, n);
}

/// Runs the claim's checker on candidates 0..budget-1 and keeps the
/// lowest-index violation. Any worker count gives the same result.
inline ClaimResult hunt(const Claim& claim, const SearchConfig& config) {
  if (config.n < 0 || config.n > claim.max_n) {
    throw CapacityError("claim " + claim.id + " supports 0 <= n <= " + std::to_string(claim.max_n));
  }
  const unsigned workers = std::max(1U, config.workers);
  std::atomic<std::uint64_t> best{config.budget};
  std::vector<std::optional<Counterexample>> found(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    try {
      for (std::uint64_t i = w; i < best.load(); i += workers) {
        Instance inst = candidate(claim, config.seed, config.n, i);
        auto v = claim.check(inst);
        if (!v) continue;
        found[w] = Counterexample{i, *v, instance_to_json(inst)};
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  ClaimResult r{claim.id, claim.kind, config.seed, config.n, config.budget, config.budget, std::nullopt};
  for (auto& c : found) {
    if (c && (!r.counterexample || c->index < r.counterexample->index)) r.counterexample = std::move(c);
  }
  if (r.counterexample) r.tested = r.counterexample->index + 1;
  return r;
}

inline ClaimResult hunt(std::string_view claim_id, const SearchConfig& config) {
  return hunt(find_claim(claim_id), config);
}

/// Reloads a serialized counterexample and reruns the claim's checker on it.
inline std::optional<std::string> revalidate(const Claim& claim, const Json& instance) {
  return claim.check(instance_from_json(instance));
}

inline Json result_to_json(const ClaimResult& r) {
  Json j = Json::object();
  j["claim"] = r.claim;
  j["kind"] = std::string(to_string(r.kind));
  j["seed"] = r.seed;
  j["n"] = r.n;
  j["budget"] = r.budget;
  j["tested"] = r.tested;
  j["verdict"] = r.found() ? "counterexample" : "no-counterexample-found";
  if (r.counterexample) {
    Json c = Json::object();
    c["index"] = r.counterexample->index;
    c["witness"] = r.counterexample->witness;
    c["instance"] = r.counterexample->instance;
    j["counterexample"] = c;
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

}  // namespace domclo

#endif  // DOMCLO_SEARCH_HPP
