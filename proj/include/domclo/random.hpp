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

#ifndef DOMCLO_RANDOM_HPP
#define DOMCLO_RANDOM_HPP

#include <cstdint>
#include <random>

#include "domclo/setcore.hpp"

namespace domclo {

/// Deterministic random stream keyed by (seed, index).
///
/// Each candidate index gets its own engine, so any partition of the index
/// range over workers sees the same values. Only raw engine output is used;
/// std distributions are implementation-defined and would break byte-identical
/// replays across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t index = 0) : engine_(key(seed, index)) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /// Uniformly random subset of an n-element ground set.
  Subset subset(int n) { return Subset(static_cast<Mask>(engine_()) & Subset::full(n).bits()); }

  /// Random subset where each element is included with probability num/den.
  Subset sparse_subset(int n, std::uint64_t num, std::uint64_t den) {
    Subset out;
    for (int i = 0; i < n; ++i) {
      if (chance(num, den)) out = out.with(i);
    }
    return out;
  }

 private:
  static std::uint64_t key(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace domclo

#endif  // DOMCLO_RANDOM_HPP
