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

/// @file category.hpp
/// Pullback property of generator families, its relation to antimatroid
/// closures, and exhaustive enumeration of small operator classes.
///
/// Subsets ordered by inclusion form a thin category, so a mediating arrow
/// below a common lower generator V is just the inclusion V within X & Y and
/// is unique whenever it exists. The pullback property then reduces to: every
/// generator family is closed under pairwise intersection.

#ifndef DOMCLO_CATEGORY_HPP
#define DOMCLO_CATEGORY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "domclo/closure.hpp"
#include "domclo/error.hpp"
#include "domclo/operators.hpp"
#include "domclo/properties.hpp"
#include "domclo/setcore.hpp"

namespace domclo {

struct PullbackReport {
  bool holds = true;
  /// (Z, X, Y): X and Y generate Z but X & Y does not. Empty when holds.
  std::vector<Subset> witness;
  /// One entry per image value, in canonical order of the image.
  std::vector<GeneratorSet> per_image;
  std::string detail;

  explicit operator bool() const { return holds; }
};

/// Per-image generator families and their pairwise intersection closure.
/// Requires a dominating operator.
inline PullbackReport pullback_property(const Operator& delta) {
  require_dominating(delta, "pullback check");
  const auto& g = delta.ground();
  const auto table = delta.table();
  std::vector<std::vector<Subset>> preimages(table.size());
  for (Subset x : powerset(g)) preimages[table[x.bits()].bits()].push_back(x);

  PullbackReport r;
  for (Subset z : powerset(g)) {
    auto& family = preimages[z.bits()];
    if (family.empty()) continue;
    GeneratorSet gs;
    gs.target = z;
    gs.is_image = true;
    gs.minimal = detail::minimal_members(family);
    gs.generators = SubsetFamily(family);
    if (r.holds) {
      for (std::size_t i = 0; i < family.size() && r.holds; ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
          const Subset meet = family[i] & family[j];
          if (table[meet.bits()] != z) {
            r.holds = false;
            r.witness = {z, family[i], family[j]};
            r.detail = format_subset(family[i], g) + " and " + format_subset(family[j], g) + " generate " +
                       format_subset(z, g) + " but " + format_subset(meet, g) + " generates " +
                       format_subset(table[meet.bits()], g);
            break;
          }
        }
      }
    }
    r.per_image.push_back(std::move(gs));
  }
  return r;
}

/// The three predicates tied together by the antimatroid characterization.
struct AntimatroidVerdicts {
  bool pullback = false;
  bool closure_antimatroid = false;  // is_closure and is_antimatroid
  bool uniquely_generated = false;

  bool agree() const { return pullback == closure_antimatroid && closure_antimatroid == uniquely_generated; }
};

inline AntimatroidVerdicts antimatroid_verdicts(const Operator& delta) {
  AntimatroidVerdicts v;
  v.pullback = pullback_property(delta).holds;
  v.closure_antimatroid = is_closure(delta).holds && is_antimatroid(delta).holds;
  v.uniquely_generated = is_uniquely_generated(delta).holds;
  return v;
}

/// Holds iff pullback, closure-and-antimatroid, and unique generation give
/// one verdict. A disagreement is reported, never reconciled.
inline PropertyReport antimatroid_equivalence(const Operator& delta) {
  PropertyReport r;
  r.property = "antimatroid-equivalence";
  r.checked = 1;
  const auto v = antimatroid_verdicts(delta);
  if (!v.agree()) {
    auto word = [](bool b) { return b ? "true" : "false"; };
    r.holds = false;
    r.detail = std::string("pullback=") + word(v.pullback) + ", closure+antimatroid=" + word(v.closure_antimatroid) +
               ", uniquely-generated=" + word(v.uniquely_generated);
  }
  return r;
}

enum class OperatorClass { dominating, closure, antimatroid, matroid, topological };

inline std::string_view to_string(OperatorClass c) {
  switch (c) {
    case OperatorClass::dominating: return "dominating";
    case OperatorClass::closure: return "closure";
    case OperatorClass::antimatroid: return "antimatroid";
    case OperatorClass::matroid: return "matroid";
    case OperatorClass::topological: return "topological";
  }
  return "?";
}

inline OperatorClass parse_operator_class(std::string_view name) {
  for (auto c : {OperatorClass::dominating, OperatorClass::closure, OperatorClass::antimatroid, OperatorClass::matroid,
                 OperatorClass::topological}) {
    if (to_string(c) == name) return c;
  }
  throw UsageError("unknown operator class '" + std::string(name) + "'");
}

inline constexpr int kMaxFamilyEnumeration = 4;
inline constexpr int kMaxDominatingEnumeration = 2;

using OperatorVisitor = std::function<void(const Operator&)>;

namespace detail {

// Families over 2^n encoded as a word with one bit per subset.
inline bool family_is_moore(std::uint64_t family, int n) {
  const Mask top = Subset::full(n).bits();
  if (((family >> top) & 1U) == 0) return false;
  const Mask count = Mask{1} << n;
  for (Mask a = 0; a < count; ++a) {
    if (((family >> a) & 1U) == 0) continue;
    for (Mask b = a + 1; b < count; ++b) {
      if (((family >> b) & 1U) != 0 && ((family >> (a & b)) & 1U) == 0) return false;
    }
  }
  return true;
}

inline std::vector<Subset> family_members(std::uint64_t family, int n) {
  std::vector<Subset> out;
  for (Mask a = 0; a < (Mask{1} << n); ++a) {
    if ((family >> a) & 1U) out.push_back(Subset(a));
  }
  return out;
}

inline bool in_class(const Operator& op, OperatorClass c) {
  switch (c) {
    case OperatorClass::dominating: return is_dominating(op).holds;
    case OperatorClass::closure: return true;
    case OperatorClass::antimatroid: return is_antimatroid(op).holds;
    case OperatorClass::matroid: return is_matroid(op).holds;
    case OperatorClass::topological: return is_topological(op).holds;
  }
  return false;
}

}  // namespace detail

/// Counts (and optionally visits) every operator of class `c` on the first n
/// letters. Closure classes come from intersection-closed families containing
/// S (n <= 4). Dominating operators are enumerated directly as monotone,
/// expansive tables with any image for the empty set (n <= 2).
inline std::uint64_t enumerate_class(int n, OperatorClass c, const OperatorVisitor& visit = {}) {
  if (n < 0) throw UsageError("enumerate: n must be non-negative");
  const GroundSet ground = GroundSet::letters(n);
  std::uint64_t count = 0;
  if (c == OperatorClass::dominating) {
    if (n > kMaxDominatingEnumeration) {
      throw CapacityError("dominating enumeration supports n <= " + std::to_string(kMaxDominatingEnumeration));
    }
    const auto order = canonical_order(n);
    std::vector<Subset> images(ground.power_size());
    auto rec = [&](auto&& self, std::size_t pos) -> void {
      if (pos == order.size()) {
        ++count;
        if (visit) visit(table_operator(ground, images));
        return;
      }
      const Subset x = order[pos];
      Subset lo = x;
      x.for_each_element([&](int e) { lo = lo | images[x.without(e).bits()]; });
      for_each_subset_of(ground.full() - lo, [&](Subset extra) {
        images[x.bits()] = lo | extra;
        self(self, pos + 1);
      });
    };
    rec(rec, 0);
    return count;
  }
  if (n > kMaxFamilyEnumeration) {
    throw CapacityError("closure family enumeration supports n <= " + std::to_string(kMaxFamilyEnumeration));
  }
  const std::uint64_t families = std::uint64_t{1} << (std::uint64_t{1} << n);
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    if (!detail::family_is_moore(fam, n)) continue;
    const Operator op = from_family(ground, SubsetFamily(detail::family_members(fam, n)));
    if (!detail::in_class(op, c)) continue;
    ++count;
    if (visit) visit(op);
  }
  return count;
}

/// Closure count by a second route: for every family F over 2^n, build
/// X -> intersection of the members of F containing X (S when none does),
/// and count those maps that pass is_closure with fixed points exactly F.
inline std::uint64_t closure_count_by_reconstruction(int n) {
  if (n < 0 || n > kMaxFamilyEnumeration) {
    throw CapacityError("closure reconstruction supports n <= " + std::to_string(kMaxFamilyEnumeration));
  }
  const GroundSet ground = GroundSet::letters(n);
  const Mask count = Mask{1} << n;
  const std::uint64_t families = std::uint64_t{1} << count;
  std::uint64_t closures = 0;
  std::vector<Subset> images(count);
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    for (Mask x = 0; x < count; ++x) {
      Mask meet = ground.full().bits();
      for (Mask m = 0; m < count; ++m) {
        if (((fam >> m) & 1U) != 0 && (x & ~m) == 0) meet &= m;
      }
      images[x] = Subset(meet);
    }
    const Operator op = table_operator(ground, images);
    if (!is_closure(op)) continue;
    std::uint64_t fixed = 0;
    for (Mask x = 0; x < count; ++x) {
      if (images[x] == Subset(x)) fixed |= std::uint64_t{1} << x;
    }
    if (fixed == fam) ++closures;
  }
  return closures;
}

}  // namespace domclo

#endif  // DOMCLO_CATEGORY_HPP
