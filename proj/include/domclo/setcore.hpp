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

/// @file setcore.hpp
/// Ground sets, bit-indexed subsets and subset families.
///
/// A subset of an n-element ground set is a 32-bit membership word whose bit
/// i is set iff element i is a member. All set algebra is word arithmetic.
/// Two capacity tiers apply: any operation that materializes one entry per
/// subset (power set, tables, exhaustive checks) requires n <= 16, while lazy
/// evaluation works up to n <= 24.

#ifndef DOMCLO_SETCORE_HPP
#define DOMCLO_SETCORE_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domclo/error.hpp"

namespace domclo {

using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 24;
inline constexpr int kMaxTableSize = 16;

/// Membership word over the indices of some GroundSet.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(Mask bits) : bits_(bits) {}

  static constexpr Subset singleton(int element) { return Subset(Mask{1} << element); }
  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int element) const { return (bits_ >> element) & 1U; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(Subset other) const {
    return subset_of(other) && bits_ != other.bits_;
  }

  constexpr Subset with(int element) const { return Subset(bits_ | (Mask{1} << element)); }
  constexpr Subset without(int element) const { return Subset(bits_ & ~(Mask{1} << element)); }

  /// Calls fn(i) for each member index in ascending order.
  template <typename Fn>
  constexpr void for_each_element(Fn&& fn) const {
    for (Mask rest = bits_; rest != 0; rest &= rest - 1) {
      fn(std::countr_zero(rest));
    }
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;

 private:
  Mask bits_ = 0;
};

/// Ascending cardinality, ties broken by ascending numeric value of the word.
struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const {
    const int ca = a.size();
    const int cb = b.size();
    return ca != cb ? ca < cb : a.bits() < b.bits();
  }
};

/// Calls fn(x) for every subset x of `of` (including the empty set and `of`
/// itself), in ascending numeric order.
template <typename Fn>
constexpr void for_each_subset_of(Subset of, Fn&& fn) {
  const Mask m = of.bits();
  Mask x = 0;
  while (true) {
    fn(Subset(x));
    if (x == m) break;
    x = (x - m) & m;
  }
}

/// The finite universe S with labeled elements.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) > kMaxGroundSize) {
      throw CapacityError("ground set has " + std::to_string(labels_.size()) +
                          " elements; at most " + std::to_string(kMaxGroundSize) +
                          " are supported");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw InputError("element labels must be non-empty");
      for (char c : labels_[i]) {
        if (c == ',' || c == '{' || c == '}' || c == ' ') {
          throw InputError("element label '" + labels_[i] +
                           "' contains a reserved character");
        }
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (labels_[i] == labels_[j]) throw InputError("duplicate element label '" + labels_[i] + "'");
      }
    }
  }

  /// Ground set {a, b, c, ...} of the given size.
  static GroundSet letters(int n) {
    if (n < 0 || n > kMaxGroundSize) throw CapacityError("ground set size out of range");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
    return GroundSet(std::move(labels));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int element) const { return labels_.at(element); }
  Subset full() const { return Subset::full(size()); }
  bool owns(Subset s) const { return s.subset_of(full()); }
  std::size_t power_size() const { return std::size_t{1} << size(); }

  std::optional<int> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == name) return static_cast<int>(i);
    }
    return std::nullopt;
  }

  int require_index(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw InputError("unknown element label '" + std::string(name) + "'");
  }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

inline void require_table_capacity(const GroundSet& ground, std::string_view what) {
  if (ground.size() > kMaxTableSize) {
    throw CapacityError(std::string(what) + " needs n <= " + std::to_string(kMaxTableSize) +
                        ", ground set has " + std::to_string(ground.size()) + " elements");
  }
}

inline void require_owned(const GroundSet& ground, Subset s) {
  if (!ground.owns(s)) {
    throw UsageError("subset has members outside the " + std::to_string(ground.size()) +
                     "-element ground set");
  }
}

namespace detail {

inline std::vector<Subset> build_canonical_order(int n) {
  std::vector<Subset> order;
  order.reserve(std::size_t{1} << n);
  std::vector<std::vector<Mask>> buckets(static_cast<std::size_t>(n) + 1);
  for (Mask x = 0; x < (Mask{1} << n); ++x) buckets[std::popcount(x)].push_back(x);
  for (const auto& bucket : buckets) {
    for (Mask x : bucket) order.emplace_back(x);
  }
  return order;
}

}  // namespace detail

/// All 2^n subsets of an n-element ground set in canonical order. n <= 16.
inline std::span<const Subset> canonical_order(int n) {
  if (n < 0 || n > kMaxTableSize) {
    throw CapacityError("power set enumeration needs n <= " + std::to_string(kMaxTableSize));
  }
  static const auto orders = [] {
    std::array<std::vector<Subset>, kMaxTableSize + 1> all;
    for (int k = 0; k <= kMaxTableSize; ++k) all[k] = detail::build_canonical_order(k);
    return all;
  }();
  return orders[n];
}

inline std::span<const Subset> powerset(const GroundSet& ground) {
  require_table_capacity(ground, "power set enumeration");
  return canonical_order(ground.size());
}

struct CoveringPair {
  Subset lower;  // X
  int element;   // x, not a member of X

  Subset upper() const { return lower.with(element); }
  friend bool operator==(const CoveringPair&, const CoveringPair&) = default;
};

/// Calls fn(X, x) for every X in canonical order and every x not in X,
/// ascending. Exactly n * 2^(n-1) calls. Stops early when fn returns false.
template <typename Fn>
bool for_each_covering_pair(int n, Fn&& fn) {
  for (Subset x : canonical_order(n)) {
    for (int e = 0; e < n; ++e) {
      if (x.contains(e)) continue;
      if (!fn(x, e)) return false;
    }
  }
  return true;
}

inline std::vector<CoveringPair> covering_pairs(const GroundSet& ground) {
  require_table_capacity(ground, "covering pair enumeration");
  std::vector<CoveringPair> pairs;
  if (ground.size() > 0) pairs.reserve(static_cast<std::size_t>(ground.size()) << (ground.size() - 1));
  for_each_covering_pair(ground.size(), [&](Subset x, int e) {
    pairs.push_back({x, e});
    return true;
  });
  return pairs;
}

/// Parses "a,c" (optionally braced, whitespace tolerant) into a subset.
inline Subset parse_subset(std::string_view text, const GroundSet& ground) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw InputError("unbalanced brace in subset '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  Subset result;
  if (text.empty()) return result;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view name = trim(text.substr(start, comma - start));
    if (name.empty()) throw InputError("empty element name in subset '" + std::string(text) + "'");
    result = result.with(ground.require_index(name));
    start = comma + 1;
  }
  return result;
}

inline Subset subset_from_labels(const std::vector<std::string>& names, const GroundSet& ground) {
  Subset result;
  for (const auto& name : names) result = result.with(ground.require_index(name));
  return result;
}

/// Comma-joined member labels in ground order, e.g. "a,c,d"; "" for the empty set.
inline std::string subset_key(Subset s, const GroundSet& ground) {
  std::string out;
  s.for_each_element([&](int i) {
    if (!out.empty()) out += ',';
    out += ground.label(i);
  });
  return out;
}

/// Report rendering, e.g. "{a,c,d}".
inline std::string format_subset(Subset s, const GroundSet& ground) {
  return "{" + subset_key(s, ground) + "}";
}

inline std::vector<std::string> subset_labels(Subset s, const GroundSet& ground) {
  std::vector<std::string> out;
  s.for_each_element([&](int i) { out.push_back(ground.label(i)); });
  return out;
}

/// A deduplicated collection of subsets kept in canonical order.
class SubsetFamily {
 public:
  SubsetFamily() = default;

  explicit SubsetFamily(std::vector<Subset> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), CanonicalLess{});
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Subset operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Subset>& members() const { return members_; }

  bool contains(Subset s) const {
    return std::binary_search(members_.begin(), members_.end(), s, CanonicalLess{});
  }

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  std::vector<Subset> members_;
};

inline std::string format_family(const SubsetFamily& family, const GroundSet& ground) {
  std::string out = "{";
  bool first = true;
  for (Subset s : family) {
    if (!first) out += ", ";
    first = false;
    out += format_subset(s, ground);
  }
  return out + "}";
}

}  // namespace domclo

#endif  // DOMCLO_SETCORE_HPP
