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

/// @file closure.hpp
/// Dominated closure, closed sets, generators and equivalence classes.

#ifndef DOMCLO_CLOSURE_HPP
#define DOMCLO_CLOSURE_HPP

#include <map>
#include <string>
#include <vector>

#include "domclo/operators.hpp"
#include "domclo/properties.hpp"
#include "domclo/setcore.hpp"

namespace domclo {

/// Closure induced by a dominating operator: Y maps to the union of every Z
/// within Y.Delta whose own region stays inside Y.Delta. By monotonicity this
/// collapses to Y plus the neighbors z with {z}.Delta inside Y.Delta, which is
/// the default evaluation.
///
/// Throws PreconditionError if `delta` is not expansive and monotone.
inline Operator dominated_closure(const Operator& delta,
                                  ClosureEvaluation evaluation = ClosureEvaluation::singleton_test) {
  require_dominating(delta, "dominated closure");
  return detail::make_dominated_closure(delta, evaluation);
}

/// Fixed points of a closure operator in canonical order.
inline SubsetFamily closed_sets(const Operator& phi) {
  require_closure(phi, "closed-set enumeration");
  std::vector<Subset> fixed;
  for (Subset y : powerset(phi.ground())) {
    if (phi.eval(y) == y) fixed.push_back(y);
  }
  return SubsetFamily(std::move(fixed));
}

struct GeneratorSet {
  Subset target;
  SubsetFamily generators;  // every X with X.alpha = target
  SubsetFamily minimal;     // the inclusion-minimal generators
  bool is_image = false;    // false when no set maps to target
};

namespace detail {

inline SubsetFamily minimal_members(const std::vector<Subset>& sets) {
  std::vector<Subset> out;
  for (Subset x : sets) {
    bool minimal = true;
    for (Subset w : sets) {
      if (w.proper_subset_of(x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return SubsetFamily(std::move(out));
}

}  // namespace detail

/// Exhaustive preimage scan of `target`.
inline GeneratorSet generators(const Operator& op, Subset target) {
  require_table_capacity(op.ground(), "generator scan");
  require_owned(op.ground(), target);
  std::vector<Subset> found;
  for (Subset x : powerset(op.ground())) {
    if (op.eval(x) == target) found.push_back(x);
  }
  GeneratorSet out;
  out.target = target;
  out.is_image = !found.empty();
  out.minimal = detail::minimal_members(found);
  out.generators = SubsetFamily(std::move(found));
  return out;
}

/// Minimal generators of Y.alpha. A single set exactly when the operator is
/// uniquely generated at Y.alpha.
inline SubsetFamily gamma(const Operator& op, Subset y) { return generators(op, op.eval(y)).minimal; }

inline bool delta_equivalent(const Operator& op, Subset x, Subset y) { return op.eval(x) == op.eval(y); }

struct EquivalenceClass {
  Subset image;
  SubsetFamily members;
};

/// Partition of the power set by image, ordered by image in canonical order.
inline std::vector<EquivalenceClass> equivalence_classes(const Operator& op) {
  std::map<Subset, std::vector<Subset>, CanonicalLess> groups;
  for (Subset y : powerset(op.ground())) groups[op.eval(y)].push_back(y);
  std::vector<EquivalenceClass> out;
  out.reserve(groups.size());
  for (auto& [image, members] : groups) out.push_back({image, SubsetFamily(std::move(members))});
  return out;
}

/// Whether X and Y generating `target` implies X & Y generates it.
inline PropertyReport generator_intersection_closed(const Operator& op, Subset target) {
  PropertyReport r;
  r.property = "generator-intersection-closed";
  const auto& g = op.ground();
  const auto gens = generators(op, target);
  const auto& list = gens.generators.members();
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      ++r.checked;
      const Subset meet = list[i] & list[j];
      if (!gens.generators.contains(meet)) {
        detail::fail(r, {target, list[i], list[j]},
                     format_subset(list[i], g) + " and " + format_subset(list[j], g) + " generate " +
                         format_subset(target, g) + " but their intersection " + format_subset(meet, g) +
                         " generates " + format_subset(op.eval(meet), g));
        return r;
      }
    }
  }
  return r;
}

}  // namespace domclo

#endif  // DOMCLO_CLOSURE_HPP
