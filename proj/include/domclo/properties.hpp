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

/// @file properties.hpp
/// Decision procedures for operator axioms.
///
/// Every check is model checking over the finite power set (n <= 16) and
/// returns a PropertyReport. On failure the witness is the first violating
/// case in canonical enumeration order, so reruns reproduce it exactly.

#ifndef DOMCLO_PROPERTIES_HPP
#define DOMCLO_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "domclo/error.hpp"
#include "domclo/operators.hpp"
#include "domclo/random.hpp"
#include "domclo/setcore.hpp"

namespace domclo {

enum class CheckMode { exhaustive, sampled };

inline std::string_view to_string(CheckMode mode) {
  return mode == CheckMode::exhaustive ? "exhaustive" : "sampled";
}

struct PropertyReport {
  std::string property;
  bool holds = true;
  /// Sets demonstrating the failure. Elements appear as singletons.
  std::vector<Subset> witness;
  /// For checks on maps: 1 marks a witness set drawn from the target ground.
  /// Empty when every set comes from the checked (source) ground.
  std::vector<std::uint8_t> witness_side;
  std::uint64_t checked = 0;
  CheckMode mode = CheckMode::exhaustive;
  /// Rendered explanation of the witness; empty when the property holds.
  std::string detail;

  explicit operator bool() const { return holds; }
};

namespace detail {

inline PropertyReport start(std::string_view name, const Operator& op) {
  require_table_capacity(op.ground(), std::string(name) + " check");
  PropertyReport r;
  r.property = std::string(name);
  return r;
}

inline void fail(PropertyReport& r, std::vector<Subset> witness, std::string detail) {
  r.holds = false;
  r.witness = std::move(witness);
  r.witness_side.clear();
  r.detail = std::move(detail);
}

inline void fail(PropertyReport& r, std::vector<Subset> witness, std::vector<std::uint8_t> side, std::string detail) {
  fail(r, std::move(witness), std::move(detail));
  r.witness_side = std::move(side);
}

inline constexpr int kExhaustivePairLimit = 10;
inline constexpr std::uint64_t kSampledPairs = std::uint64_t{1} << 20;

}  // namespace detail

/// Y within Y.alpha for all Y.
inline PropertyReport is_expansive(const Operator& op) {
  auto r = detail::start("expansive", op);
  const auto& g = op.ground();
  for (Subset y : powerset(g)) {
    ++r.checked;
    const Subset img = op.eval(y);
    if (!y.subset_of(img)) {
      detail::fail(r, {y}, format_subset(y, g) + " is not within its image " + format_subset(img, g));
      return r;
    }
  }
  return r;
}

/// Y.alpha within Y for all Y.
inline PropertyReport is_contractive(const Operator& op) {
  auto r = detail::start("contractive", op);
  const auto& g = op.ground();
  for (Subset y : powerset(g)) {
    ++r.checked;
    const Subset img = op.eval(y);
    if (!img.subset_of(y)) {
      detail::fail(r, {y}, "image " + format_subset(img, g) + " is not within " + format_subset(y, g));
      return r;
    }
  }
  return r;
}

/// X.alpha within (X + x).alpha for every covering pair. Equivalent to full
/// monotonicity: any X within Y is joined to Y by a chain of covering pairs.
inline PropertyReport is_monotone(const Operator& op) {
  auto r = detail::start("monotone", op);
  const auto& g = op.ground();
  for_each_covering_pair(g.size(), [&](Subset x, int e) {
    ++r.checked;
    const Subset up = x.with(e);
    const Subset lo_img = op.eval(x);
    const Subset up_img = op.eval(up);
    if (lo_img.subset_of(up_img)) return true;
    detail::fail(r, {x, up},
                 format_subset(x, g) + " maps to " + format_subset(lo_img, g) + " but " + format_subset(up, g) +
                     " maps to " + format_subset(up_img, g));
    return false;
  });
  return r;
}

/// Y.alpha.alpha = Y.alpha for all Y.
inline PropertyReport is_idempotent(const Operator& op) {
  auto r = detail::start("idempotent", op);
  const auto& g = op.ground();
  for (Subset y : powerset(g)) {
    ++r.checked;
    const Subset once = op.eval(y);
    const Subset twice = op.eval(once);
    if (once != twice) {
      detail::fail(r, {y},
                   format_subset(y, g) + " maps to " + format_subset(once, g) + ", which maps to " +
                       format_subset(twice, g));
      return r;
    }
  }
  return r;
}

/// Y.alpha equals the union of {y}.alpha over y in Y (the empty union for Y
/// empty), i.e. the operator is determined by its singleton images.
inline PropertyReport is_extended(const Operator& op) {
  auto r = detail::start("extended", op);
  const auto& g = op.ground();
  std::vector<Subset> singles;
  for (int i = 0; i < g.size(); ++i) singles.push_back(op.eval(Subset::singleton(i)));
  for (Subset y : powerset(g)) {
    ++r.checked;
    Subset joined;
    y.for_each_element([&](int i) { joined = joined | singles[i]; });
    const Subset img = op.eval(y);
    if (img != joined) {
      detail::fail(r, {y},
                   format_subset(y, g) + " maps to " + format_subset(img, g) + " but its singletons cover " +
                       format_subset(joined, g));
      return r;
    }
  }
  return r;
}

/// (X.alpha + Y.alpha).alpha = (X + Y).alpha. Exhaustive over ordered pairs
/// for n <= 10; above that, 2^20 pairs drawn from a stream seeded by `seed`.
inline PropertyReport is_path_independent(const Operator& op, std::uint64_t seed = 0) {
  auto r = detail::start("path-independent", op);
  const auto& g = op.ground();
  auto test = [&](Subset x, Subset y) {
    ++r.checked;
    const Subset lhs = op.eval(op.eval(x) | op.eval(y));
    const Subset rhs = op.eval(x | y);
    if (lhs == rhs) return true;
    detail::fail(r, {x, y},
                 "X=" + format_subset(x, g) + ", Y=" + format_subset(y, g) + ": (X.a + Y.a).a = " +
                     format_subset(lhs, g) + " but (X + Y).a = " + format_subset(rhs, g));
    return false;
  };
  if (g.size() <= detail::kExhaustivePairLimit) {
    const auto all = powerset(g);
    for (Subset x : all) {
      for (Subset y : all) {
        if (!test(x, y)) return r;
      }
    }
    return r;
  }
  r.mode = CheckMode::sampled;
  Rng rng(seed);
  for (std::uint64_t i = 0; i < detail::kSampledPairs; ++i) {
    const Subset x = rng.subset(g.size());
    const Subset y = rng.subset(g.size());
    if (!test(x, y)) return r;
  }
  return r;
}

/// Expansive and monotone.
inline PropertyReport is_dominating(const Operator& op) {
  auto e = is_expansive(op);
  if (!e) {
    e.property = "dominating";
    e.detail = "not expansive: " + e.detail;
    return e;
  }
  auto m = is_monotone(op);
  m.checked += e.checked;
  m.property = "dominating";
  if (!m) m.detail = "not monotone: " + m.detail;
  return m;
}

/// Expansive, monotone and idempotent.
inline PropertyReport is_closure(const Operator& op) {
  auto d = is_dominating(op);
  d.property = "closure";
  if (!d) return d;
  auto i = is_idempotent(op);
  i.checked += d.checked;
  i.property = "closure";
  if (!i) i.detail = "not idempotent: " + i.detail;
  return i;
}

inline void require_dominating(const Operator& op, std::string_view what) {
  auto r = is_dominating(op);
  if (!r) throw PreconditionError(std::string(what) + " needs a dominating operator; " + r.detail);
}

inline void require_closure(const Operator& op, std::string_view what) {
  auto r = is_closure(op);
  if (!r) throw PreconditionError(std::string(what) + " needs a closure operator; " + r.detail);
}

namespace detail {

/// minimal[X] is true iff no proper subset of X has the same image as X.
inline std::vector<bool> globally_minimal_generators(const std::vector<Subset>& table) {
  std::vector<bool> minimal(table.size(), true);
  for (Mask x = 0; x < table.size(); ++x) {
    const Subset img = table[x];
    const Subset xs(x);
    bool found = false;
    for_each_subset_of(xs, [&](Subset w) {
      if (!found && w != xs && table[w.bits()] == img) found = true;
    });
    minimal[x] = !found;
  }
  return minimal;
}

}  // namespace detail

/// For every Y there is exactly one minimal generator of Y.alpha within Y.
inline PropertyReport is_uniquely_generated(const Operator& op) {
  auto r = detail::start("uniquely-generated", op);
  const auto& g = op.ground();
  const auto table = op.table();
  const auto minimal = detail::globally_minimal_generators(table);
  // minimal generators grouped by image value
  std::vector<std::vector<Subset>> by_image(table.size());
  for (Subset x : powerset(g)) {
    if (minimal[x.bits()]) by_image[table[x.bits()].bits()].push_back(x);
  }
  for (Subset y : powerset(g)) {
    ++r.checked;
    std::vector<Subset> below;
    for (Subset m : by_image[table[y.bits()].bits()]) {
      if (m.subset_of(y)) below.push_back(m);
    }
    if (below.size() != 1) {
      std::vector<Subset> witness{y};
      witness.insert(witness.end(), below.begin(), below.end());
      std::string names;
      for (Subset m : below) names += (names.empty() ? "" : ", ") + format_subset(m, g);
      detail::fail(r, std::move(witness),
                   format_subset(y, g) + " generates " + format_subset(table[y.bits()], g) + " with " +
                       std::to_string(below.size()) + " minimal generators within it: " + names);
      return r;
    }
  }
  return r;
}

namespace detail {

// Shared body of the exchange and anti-exchange checks.
inline PropertyReport exchange_check(const Operator& op, bool anti) {
  const char* name = anti ? "antimatroid" : "matroid";
  auto r = start(name, op);
  require_closure(op, std::string(name) + " check");
  const auto& g = op.ground();
  const int n = g.size();
  for (Subset y : powerset(g)) {
    if (op.eval(y) != y) continue;
    for (int x = 0; x < n; ++x) {
      if (y.contains(x)) continue;
      const Subset yx = op.eval(y.with(x));
      for (int z = 0; z < n; ++z) {
        if (z == x || y.contains(z)) continue;
        ++r.checked;
        if (!yx.contains(z)) continue;
        const bool x_in = op.eval(y.with(z)).contains(x);
        if (anti ? x_in : !x_in) {
          fail(r, {y, Subset::singleton(x), Subset::singleton(z)},
               "closed Y=" + format_subset(y, g) + ": " + g.label(z) + " is in (Y+" + g.label(x) + ").phi and " +
                   g.label(x) + (anti ? " is" : " is not") + " in (Y+" + g.label(z) + ").phi");
          return r;
        }
      }
    }
  }
  return r;
}

}  // namespace detail

/// Exchange axiom over closed Y and distinct x, z outside Y. Closure only.
inline PropertyReport is_matroid(const Operator& op) { return detail::exchange_check(op, false); }

/// Anti-exchange axiom over closed Y and distinct x, z outside Y. Closure only.
inline PropertyReport is_antimatroid(const Operator& op) { return detail::exchange_check(op, true); }

/// Empty set closed and closure distributes over binary union. Closure only.
/// Pairs are checked exhaustively for n <= 10; above that the equivalent
/// singleton form (Y.phi is the union of its members' closures) is used.
inline PropertyReport is_topological(const Operator& op) {
  auto r = detail::start("topological", op);
  require_closure(op, "topological check");
  const auto& g = op.ground();
  ++r.checked;
  const Subset empty_img = op.eval(Subset());
  if (!empty_img.empty()) {
    detail::fail(r, {Subset()}, "the empty set maps to " + format_subset(empty_img, g));
    return r;
  }
  if (g.size() <= detail::kExhaustivePairLimit) {
    const auto all = powerset(g);
    for (Subset x : all) {
      for (Subset y : all) {
        ++r.checked;
        const Subset lhs = op.eval(x | y);
        const Subset rhs = op.eval(x) | op.eval(y);
        if (lhs != rhs) {
          detail::fail(r, {x, y},
                       "(" + format_subset(x, g) + " + " + format_subset(y, g) + ").phi = " + format_subset(lhs, g) +
                           " but the union of closures is " + format_subset(rhs, g));
          return r;
        }
      }
    }
    return r;
  }
  auto ext = is_extended(op);
  ext.property = "topological";
  ext.checked += r.checked;
  return ext;
}

/// For all X and every y in X.alpha: {y}.alpha lies within X.alpha.
inline PropertyReport is_transitively_closed(const Operator& op) {
  auto r = detail::start("transitively-closed", op);
  const auto& g = op.ground();
  std::vector<Subset> singles;
  for (int i = 0; i < g.size(); ++i) singles.push_back(op.eval(Subset::singleton(i)));
  for (Subset x : powerset(g)) {
    const Subset img = op.eval(x);
    bool ok = true;
    img.for_each_element([&](int y) {
      if (!ok) return;
      ++r.checked;
      if (!singles[y].subset_of(img)) {
        ok = false;
        detail::fail(r, {x, Subset::singleton(y)},
                     g.label(y) + " is in " + format_subset(x, g) + ".a = " + format_subset(img, g) + " but {" +
                         g.label(y) + "}.a = " + format_subset(singles[y], g));
      }
    });
    if (!ok) return r;
  }
  return r;
}

/// For all X, Y: X within Y.alpha implies X.alpha within Y.alpha.
inline PropertyReport is_region_stable(const Operator& op) {
  auto r = detail::start("region-stable", op);
  const auto& g = op.ground();
  const auto table = op.table();
  for (Subset y : powerset(g)) {
    const Subset region = table[y.bits()];
    bool ok = true;
    for_each_subset_of(region, [&](Subset x) {
      if (!ok) return;
      ++r.checked;
      if (!table[x.bits()].subset_of(region)) {
        ok = false;
        detail::fail(r, {x, y},
                     format_subset(x, g) + " lies in " + format_subset(y, g) + ".a = " + format_subset(region, g) +
                         " but maps to " + format_subset(table[x.bits()], g));
      }
    });
    if (!ok) return r;
  }
  return r;
}

}  // namespace domclo

#endif  // DOMCLO_PROPERTIES_HPP
