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

/// @file operators.hpp
/// Unary set operators 2^S -> 2^S.
///
/// An Operator is a cheap-to-copy handle to immutable state: the ground set,
/// the spec it was built from, and a memo table of images (n <= 16) that is
/// filled lazily. Cache writes are idempotent atomic stores, so one Operator
/// may be evaluated from several threads at once.
///
/// Construction never enforces expansivity or monotonicity. Broken operators
/// are representable on purpose; the checks in properties.hpp reject them.

#ifndef DOMCLO_OPERATORS_HPP
#define DOMCLO_OPERATORS_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "domclo/error.hpp"
#include "domclo/setcore.hpp"

namespace domclo {

enum class OperatorKind {
  table,
  extended,
  poset_downset,
  star,
  family,
  adjacency,
  compose,
  identity,
  dominated_closure,
};

inline std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::table: return "table";
    case OperatorKind::extended: return "extended";
    case OperatorKind::poset_downset: return "poset-downset";
    case OperatorKind::star: return "star";
    case OperatorKind::family: return "family";
    case OperatorKind::adjacency: return "adjacency";
    case OperatorKind::compose: return "compose";
    case OperatorKind::identity: return "identity";
    case OperatorKind::dominated_closure: return "dominated-closure";
  }
  return "unknown";
}

/// How the dominated closure of Y is evaluated.
///   singleton_test: Y plus every z in Y.eta whose own region lies in Y.Delta.
///   subset_union:   union of every Z within Y.Delta whose region lies in
///                   Y.Delta. Costs 2^|Y.Delta| evaluations; kept as an oracle.
enum class ClosureEvaluation { singleton_test, subset_union };

namespace detail {
struct OperatorState;
}

class Operator {
 public:
  Operator() = default;

  const GroundSet& ground() const;
  OperatorKind kind() const;
  int ground_size() const { return ground().size(); }

  /// Y.alpha. Throws UsageError if Y has members outside the ground set.
  Subset eval(Subset y) const;
  Subset operator()(Subset y) const { return eval(y); }

  /// Images of all 2^n subsets indexed by the subset word. n <= 16.
  std::vector<Subset> table() const;

  const detail::OperatorState& state() const { return *state_; }
  bool valid() const { return state_ != nullptr; }

  explicit Operator(std::shared_ptr<const detail::OperatorState> state) : state_(std::move(state)) {}

 private:
  std::shared_ptr<const detail::OperatorState> state_;
};

// Construction payloads. Element references are indices into the ground set.

struct TableSpec {
  std::vector<Subset> images;  // indexed by subset word
};

struct ExtendedSpec {
  std::vector<Subset> singletons;                    // {i}.alpha
  std::vector<std::pair<Subset, Subset>> overrides;  // non-singleton keys
  Subset empty_image;                                // image of the empty set
};

struct DownsetSpec {
  std::vector<std::pair<int, int>> relations;  // (lower, upper)
};

struct StarSpec {
  int star = 0;
  bool empty_maps_to_star = false;
};

struct FamilySpec {
  SubsetFamily closed;
};

struct AdjacencySpec {
  std::vector<std::vector<int>> matrix;
};

struct ComposeSpec {
  Operator first;   // applied first
  Operator second;  // applied to the result
};

struct IdentitySpec {};

struct DominatedClosureSpec {
  Operator base;
  ClosureEvaluation evaluation = ClosureEvaluation::singleton_test;
};

using OperatorSpec = std::variant<TableSpec, ExtendedSpec, DownsetSpec, StarSpec, FamilySpec,
                                  AdjacencySpec, ComposeSpec, IdentitySpec, DominatedClosureSpec>;

namespace detail {

inline constexpr Mask kUnfilled = ~Mask{0};

struct OperatorState {
  GroundSet ground;
  OperatorKind kind = OperatorKind::identity;
  OperatorSpec spec;

  // Compiled evaluator. Kinds star, poset-downset and adjacency compile to
  // the extended form.
  std::vector<Subset> table;
  std::vector<Subset> singletons;
  std::vector<std::pair<Mask, Mask>> overrides;  // sorted by key
  Subset empty_image;
  std::vector<Subset> closed;
  Operator first;
  Operator second;
  ClosureEvaluation evaluation = ClosureEvaluation::singleton_test;

  std::unique_ptr<std::atomic<Mask>[]> cache;

  Subset compute(Subset y) const;
  Subset union_of_singletons(Subset y) const {
    if (y.empty()) return empty_image;
    Subset out;
    y.for_each_element([&](int i) { out = out | singletons[i]; });
    return out;
  }
};

inline Subset dominated_closure_of(const Operator& base, Subset y, ClosureEvaluation evaluation) {
  const Subset region = base.eval(y);
  if (evaluation == ClosureEvaluation::singleton_test) {
    Subset out = y;
    (region - y).for_each_element([&](int z) {
      if (base.eval(Subset::singleton(z)).subset_of(region)) out = out.with(z);
    });
    return out;
  }
  Subset out;
  for_each_subset_of(region, [&](Subset z) {
    if (base.eval(z).subset_of(region)) out = out | z;
  });
  return out;
}

inline Subset OperatorState::compute(Subset y) const {
  switch (kind) {
    case OperatorKind::table:
      return table[y.bits()];
    case OperatorKind::identity:
      return y;
    case OperatorKind::extended:
    case OperatorKind::star:
    case OperatorKind::poset_downset:
    case OperatorKind::adjacency: {
      if (!overrides.empty() && y.size() >= 2) {
        auto it = std::lower_bound(overrides.begin(), overrides.end(), y.bits(),
                                   [](const auto& p, Mask key) { return p.first < key; });
        if (it != overrides.end() && it->first == y.bits()) return Subset(it->second);
      }
      return union_of_singletons(y);
    }
    case OperatorKind::family: {
      Subset out = ground.full();
      for (Subset c : closed) {
        if (y.subset_of(c)) out = out & c;
      }
      return out;
    }
    case OperatorKind::compose:
      return second.eval(first.eval(y));
    case OperatorKind::dominated_closure:
      return dominated_closure_of(first, y, evaluation);
  }
  return y;
}

inline std::shared_ptr<OperatorState> new_state(GroundSet ground, OperatorKind kind, OperatorSpec spec) {
  auto state = std::make_shared<OperatorState>();
  state->ground = std::move(ground);
  state->kind = kind;
  state->spec = std::move(spec);
  return state;
}

inline Operator finish(std::shared_ptr<OperatorState> state) {
  const bool cached = state->kind == OperatorKind::family || state->kind == OperatorKind::compose ||
                      state->kind == OperatorKind::dominated_closure;
  if (cached && state->ground.size() <= kMaxTableSize) {
    const std::size_t count = state->ground.power_size();
    state->cache = std::make_unique<std::atomic<Mask>[]>(count);
    for (std::size_t i = 0; i < count; ++i) state->cache[i].store(kUnfilled, std::memory_order_relaxed);
  }
  return Operator(std::move(state));
}

inline void check_same_ground(const GroundSet& a, const GroundSet& b, std::string_view what) {
  if (!(a == b)) throw UsageError(std::string(what) + ": operands are defined on different ground sets");
}

}  // namespace detail

inline const GroundSet& Operator::ground() const { return state_->ground; }
inline OperatorKind Operator::kind() const { return state_->kind; }

inline Subset Operator::eval(Subset y) const {
  require_owned(state_->ground, y);
  if (state_->cache) {
    auto& slot = state_->cache[y.bits()];
    const Mask hit = slot.load(std::memory_order_relaxed);
    if (hit != detail::kUnfilled) return Subset(hit);
    const Subset image = state_->compute(y);
    slot.store(image.bits(), std::memory_order_relaxed);
    return image;
  }
  return state_->compute(y);
}

inline std::vector<Subset> Operator::table() const {
  require_table_capacity(ground(), "operator table");
  std::vector<Subset> images(ground().power_size());
  for (Mask y = 0; y < images.size(); ++y) images[y] = eval(Subset(y));
  return images;
}

/// Operator given by an explicit image for every subset (indexed by word).
inline Operator table_operator(GroundSet ground, std::vector<Subset> images) {
  require_table_capacity(ground, "table operator");
  if (images.size() != ground.power_size()) {
    throw ValidationError("table operator needs exactly " + std::to_string(ground.power_size()) +
                          " images, got " + std::to_string(images.size()));
  }
  for (Subset img : images) {
    if (!ground.owns(img)) throw ValidationError("table image has members outside the ground set");
  }
  auto state = detail::new_state(std::move(ground), OperatorKind::table, TableSpec{images});
  state->table = std::move(images);
  return detail::finish(std::move(state));
}

/// Operator extended from its singleton images: Y.alpha is the union of
/// {y}.alpha over y in Y, except where an override names Y explicitly. The
/// empty set maps to `empty_image` (default: the empty set).
inline Operator extended_operator(GroundSet ground, std::vector<Subset> singletons,
                                  std::vector<std::pair<Subset, Subset>> overrides = {},
                                  Subset empty_image = Subset()) {
  if (static_cast<int>(singletons.size()) != ground.size()) {
    throw ValidationError("extended operator needs one image per element: expected " +
                          std::to_string(ground.size()) + ", got " + std::to_string(singletons.size()));
  }
  for (Subset img : singletons) {
    if (!ground.owns(img)) throw ValidationError("singleton image has members outside the ground set");
  }
  if (!ground.owns(empty_image)) throw ValidationError("empty-set image has members outside the ground set");
  std::vector<std::pair<Mask, Mask>> compiled;
  for (const auto& [key, img] : overrides) {
    if (key.size() < 2) {
      throw ValidationError("override key " + format_subset(key, ground) +
                            " is not a non-singleton subset");
    }
    if (!ground.owns(key) || !ground.owns(img)) {
      throw ValidationError("override has members outside the ground set");
    }
    compiled.emplace_back(key.bits(), img.bits());
  }
  std::sort(compiled.begin(), compiled.end());
  for (std::size_t i = 1; i < compiled.size(); ++i) {
    if (compiled[i].first == compiled[i - 1].first) {
      throw ValidationError("duplicate override for " + format_subset(Subset(compiled[i].first), ground));
    }
  }
  auto state = detail::new_state(ground, OperatorKind::extended,
                                 ExtendedSpec{singletons, std::move(overrides), empty_image});
  state->singletons = std::move(singletons);
  state->overrides = std::move(compiled);
  state->empty_image = empty_image;
  return detail::finish(std::move(state));
}

inline Operator identity_operator(GroundSet ground) {
  return detail::finish(detail::new_state(std::move(ground), OperatorKind::identity, IdentitySpec{}));
}

/// Closure whose closed sets are `closed`: Y maps to the intersection of all
/// members containing Y. The family must contain S and be intersection-closed.
inline Operator from_family(GroundSet ground, SubsetFamily closed) {
  for (Subset c : closed) {
    if (!ground.owns(c)) throw ValidationError("family member has elements outside the ground set");
  }
  if (!closed.contains(ground.full())) {
    throw ValidationError("closed family does not contain the ground set " +
                          format_subset(ground.full(), ground));
  }
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = i + 1; j < closed.size(); ++j) {
      const Subset meet = closed[i] & closed[j];
      if (!closed.contains(meet)) {
        throw ValidationError("closed family is not intersection-closed: " +
                              format_subset(closed[i], ground) + " and " + format_subset(closed[j], ground) +
                              " meet in " + format_subset(meet, ground) + ", which is missing");
      }
    }
  }
  auto state = detail::new_state(ground, OperatorKind::family, FamilySpec{closed});
  state->closed = closed.members();
  return detail::finish(std::move(state));
}

namespace detail {

// Shortest path along the given relation pairs from `from` to `to`.
inline std::vector<int> relation_path(const std::vector<std::pair<int, int>>& pairs, int n, int from, int to) {
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> queue{from};
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  seen[from] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (const auto& [lo, hi] : pairs) {
      if (lo != u || seen[hi]) continue;
      seen[hi] = true;
      parent[hi] = u;
      queue.push_back(hi);
    }
  }
  std::vector<int> path;
  for (int v = to; v != -1 && v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

/// Downset operator of a partial order: Y maps to every element below or
/// equal to some member of Y. `relations` holds (lower, upper) pairs; their
/// reflexive-transitive completion must be antisymmetric.
inline Operator downset_operator(std::vector<std::pair<int, int>> relations, GroundSet ground) {
  const int n = ground.size();
  for (const auto& [lo, hi] : relations) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n) throw ValidationError("order relation refers to an unknown element");
  }
  // below[u] = elements x with x <= u.
  std::vector<Subset> below(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) below[u] = Subset::singleton(u);
  for (const auto& [lo, hi] : relations) below[hi] = below[hi].with(lo);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      Subset grown = below[u];
      below[u].for_each_element([&](int v) { grown = grown | below[v]; });
      if (grown != below[u]) {
        below[u] = grown;
        changed = true;
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (below[u].contains(v) && below[v].contains(u)) {
        auto there = detail::relation_path(relations, n, u, v);
        auto back = detail::relation_path(relations, n, v, u);
        std::string cycle;
        for (int x : there) cycle += ground.label(x) + " <= ";
        for (std::size_t i = 1; i < back.size(); ++i) {
          cycle += ground.label(back[i]);
          if (i + 1 < back.size()) cycle += " <= ";
        }
        throw ValidationError("order relation has a cycle: " + cycle);
      }
    }
  }
  auto state = detail::new_state(ground, OperatorKind::poset_downset, DownsetSpec{std::move(relations)});
  state->singletons = std::move(below);
  return detail::finish(std::move(state));
}

/// Star space: Y maps to Y plus the star element; {*} maps to itself; the
/// empty set maps to {*} when `empty_maps_to_star`, else to itself.
inline Operator star_operator(GroundSet ground, int star, bool empty_maps_to_star) {
  if (star < 0 || star >= ground.size()) throw ValidationError("star element is not in the ground set");
  auto state = detail::new_state(ground, OperatorKind::star, StarSpec{star, empty_maps_to_star});
  const Subset star_set = Subset::singleton(star);
  for (int i = 0; i < ground.size(); ++i) state->singletons.push_back(Subset::singleton(i) | star_set);
  state->empty_image = empty_maps_to_star ? star_set : Subset();
  return detail::finish(std::move(state));
}

/// Extended operator of a graph: {i} maps to i plus every k with
/// matrix[i][k] != 0. The diagonal is implied.
inline Operator from_adjacency(std::vector<std::vector<int>> matrix, GroundSet ground) {
  const int n = ground.size();
  if (static_cast<int>(matrix.size()) != n) {
    throw ValidationError("adjacency matrix has " + std::to_string(matrix.size()) + " rows, expected " +
                          std::to_string(n));
  }
  auto state = detail::new_state(ground, OperatorKind::adjacency, AdjacencySpec{matrix});
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n) {
      throw ValidationError("adjacency matrix row " + std::to_string(i) + " has " +
                            std::to_string(matrix[i].size()) + " entries, expected " + std::to_string(n));
    }
    Subset row = Subset::singleton(i);
    for (int k = 0; k < n; ++k) {
      if (matrix[i][k] != 0) row = row.with(k);
    }
    state->singletons.push_back(row);
  }
  return detail::finish(std::move(state));
}

/// Y maps to Y.first.second.
inline Operator compose(const Operator& first, const Operator& second) {
  detail::check_same_ground(first.ground(), second.ground(), "compose");
  auto state = detail::new_state(first.ground(), OperatorKind::compose, ComposeSpec{first, second});
  state->first = first;
  state->second = second;
  return detail::finish(std::move(state));
}

namespace detail {

inline Operator make_dominated_closure(const Operator& base, ClosureEvaluation evaluation) {
  auto state = new_state(base.ground(), OperatorKind::dominated_closure, DominatedClosureSpec{base, evaluation});
  state->first = base;
  state->evaluation = evaluation;
  return finish(std::move(state));
}

}  // namespace detail

inline const OperatorSpec& spec_of(const Operator& op) { return op.state().spec; }

inline Subset eval(const Operator& op, Subset y) { return op.eval(y); }

/// Dominated neighborhood: Y.alpha minus Y.
inline Subset eta(const Operator& op, Subset y) { return op.eval(y) - y; }

/// True iff the neighborhood of {f} lies within the neighborhood of Y.
inline bool congruent_experience(const Operator& op, int f, Subset y) {
  if (f < 0 || f >= op.ground_size()) throw UsageError("experience element is not in the ground set");
  return eta(op, Subset::singleton(f)).subset_of(eta(op, y));
}

/// Pointwise equality over the whole power set. n <= 16.
inline bool same_operator(const Operator& a, const Operator& b) {
  if (!(a.ground() == b.ground())) return false;
  for (Subset y : powerset(a.ground())) {
    if (a.eval(y) != b.eval(y)) return false;
  }
  return true;
}

/// Materialized copy; evaluation becomes a table lookup.
inline Operator materialize(const Operator& op) { return table_operator(op.ground(), op.table()); }

}  // namespace domclo

#endif  // DOMCLO_OPERATORS_HPP
