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

/// @file generate.hpp
/// Seeded random operators and transformations.

#ifndef DOMCLO_GENERATE_HPP
#define DOMCLO_GENERATE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "domclo/closure.hpp"
#include "domclo/error.hpp"
#include "domclo/operators.hpp"
#include "domclo/random.hpp"
#include "domclo/setcore.hpp"
#include "domclo/transforms.hpp"

namespace domclo {

inline constexpr int kMaxRandomSize = 8;

namespace detail {

inline void require_random_size(int n) {
  if (n < 0 || n > kMaxRandomSize) {
    throw CapacityError("random generation supports 0 <= n <= " + std::to_string(kMaxRandomSize));
  }
}

// Raises every image to contain the images of its lower covers, visiting
// subsets by cardinality so one pass suffices.
inline void repair_monotone(std::vector<Subset>& images, int n) {
  for (Subset x : canonical_order(n)) {
    Subset img = images[x.bits()];
    x.for_each_element([&](int e) { img = img | images[x.without(e).bits()]; });
    images[x.bits()] = img;
  }
}

inline std::vector<Subset> random_dominating_table(Rng& rng, int n, bool allow_empty_image) {
  std::vector<Subset> singles(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) singles[i] = Subset::singleton(i) | rng.sparse_subset(n, 1, 3);
  std::vector<Subset> images(std::size_t{1} << n);
  for (Mask x = 1; x < images.size(); ++x) {
    Subset img;
    Subset(x).for_each_element([&](int i) { img = img | singles[i]; });
    images[x] = img;
  }
  if (allow_empty_image && rng.chance(1, 3)) images[0] = rng.sparse_subset(n, 1, 3);
  const auto overrides = rng.below(static_cast<std::uint64_t>(n) + 1);
  for (std::uint64_t k = 0; k < overrides; ++k) {
    const Subset key = rng.subset(n);
    if (key.size() < 2) continue;
    images[key.bits()] = images[key.bits()] | rng.sparse_subset(n, 1, 2);
  }
  for (Mask x = 0; x < images.size(); ++x) images[x] = images[x] | Subset(x);
  repair_monotone(images, n);
  return images;
}

inline std::vector<Subset> random_monotone_table(Rng& rng, int ns, int nt, bool fix_empty) {
  std::vector<Subset> images(std::size_t{1} << ns);
  if (!fix_empty && rng.chance(1, 4)) images[0] = rng.sparse_subset(nt, 1, 3);
  for (Subset x : canonical_order(ns)) {
    if (x.empty()) continue;
    if (rng.chance(1, 2)) images[x.bits()] = rng.sparse_subset(nt, 1, 3);
  }
  repair_monotone(images, ns);
  return images;
}

}  // namespace detail

/// Random dominating operator on the first n letters. Singletons get random
/// supersets, the table is extended by union, a few non-singleton images are
/// enlarged, and a repair pass restores monotonicity. The empty set maps to
/// itself unless `allow_empty_image`. Deterministic in (seed, index).
inline Operator random_dominating(std::uint64_t seed, int n, std::uint64_t index = 0, bool allow_empty_image = false) {
  detail::require_random_size(n);
  Rng rng(seed, index);
  return table_operator(GroundSet::letters(n), detail::random_dominating_table(rng, n, allow_empty_image));
}

inline Operator random_dominating(Rng& rng, int n, bool allow_empty_image = false) {
  detail::require_random_size(n);
  return table_operator(GroundSet::letters(n), detail::random_dominating_table(rng, n, allow_empty_image));
}

/// Random monotone transformation. The empty set maps to the empty set when
/// `fix_empty`, otherwise occasionally to a random set.
inline Transformation random_monotone_map(Rng& rng, const GroundSet& source, const GroundSet& target,
                                          bool fix_empty = false) {
  detail::require_random_size(source.size());
  return Transformation(source, target, detail::random_monotone_table(rng, source.size(), target.size(), fix_empty));
}

/// Random union-preserving map (extended, empty to empty).
inline Transformation random_extended_map(Rng& rng, const GroundSet& source, const GroundSet& target) {
  std::vector<Subset> singles;
  for (int i = 0; i < source.size(); ++i) singles.push_back(rng.sparse_subset(target.size(), 1, 2));
  return Transformation::extended(source, target, singles);
}

/// Y' maps to the elements x with {x}.f within Y'. The right adjoint of f
/// whenever f preserves unions and the empty set.
inline Transformation right_adjoint(const Transformation& f) {
  const auto& s = f.source();
  const auto& t = f.target();
  std::vector<Subset> images(t.power_size());
  for (Subset y : powerset(t)) {
    Subset out;
    for (int x = 0; x < s.size(); ++x) {
      if (f(Subset::singleton(x)).subset_of(y)) out = out.with(x);
    }
    images[y.bits()] = out;
  }
  return Transformation(t, s, std::move(images));
}

/// The smallest dominating operator on the target making f continuous for
/// `alpha`, joined with `extra` when given: Y' maps to Y' plus Y.alpha.f for
/// every Y with Y.f within Y'.
inline Operator continuous_lift(const Transformation& f, const Operator& alpha, const Operator* extra = nullptr) {
  const int nt = f.target().size();
  std::vector<Subset> images(f.target().power_size());
  for (Subset y : powerset(f.source())) {
    const Mask key = f(y).bits();
    images[key] = images[key] | f(alpha(y));
  }
  for (Mask y = 0; y < images.size(); ++y) {
    images[y] = images[y] | Subset(y);
    if (extra != nullptr) images[y] = images[y] | extra->eval(Subset(y));
  }
  detail::repair_monotone(images, nt);
  return table_operator(f.target(), std::move(images));
}

/// Downset operator of a random order on the first n letters.
inline Operator random_downset(Rng& rng, int n) {
  std::vector<std::pair<int, int>> relations;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.chance(1, 3)) relations.emplace_back(i, j);
    }
  }
  return materialize(downset_operator(std::move(relations), GroundSet::letters(n)));
}

/// Random closure: a few random sets plus S, closed under intersection,
/// read back as an operator.
inline Operator random_closure(Rng& rng, int n) {
  detail::require_random_size(n);
  const GroundSet g = GroundSet::letters(n);
  std::vector<char> member(g.power_size(), 0);
  member[g.full().bits()] = 1;
  const auto seeds = 1 + rng.below(static_cast<std::uint64_t>(2 * n + 1));
  for (std::uint64_t k = 0; k < seeds; ++k) member[rng.subset(n).bits()] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Mask a = 0; a < member.size(); ++a) {
      for (Mask b = 0; b < member.size(); ++b) {
        if (member[a] && member[b] && !member[a & b]) member[a & b] = grew = true;
      }
    }
  }
  std::vector<Subset> closed;
  for (Mask a = 0; a < member.size(); ++a) {
    if (member[a]) closed.push_back(Subset(a));
  }
  return materialize(from_family(g, SubsetFamily(std::move(closed))));
}

/// Random operator with every image a superset of its argument; monotone
/// only by accident.
inline Operator random_expansive(Rng& rng, int n) {
  detail::require_random_size(n);
  std::vector<Subset> images(std::size_t{1} << n);
  for (Mask x = 0; x < images.size(); ++x) images[x] = Subset(x) | rng.sparse_subset(n, 1, 4);
  return table_operator(GroundSet::letters(n), std::move(images));
}

}  // namespace domclo

#endif  // DOMCLO_GENERATE_HPP
