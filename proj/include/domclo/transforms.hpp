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

/// @file transforms.hpp
/// Transformations between set systems: monotonicity, continuity,
/// preservation, surjectivity onto Delta-sets, and monotone Galois
/// connections.
///
/// A Delta-set is any set in the image of Delta. For idempotent Delta these
/// are exactly the fixed points.

#ifndef DOMCLO_TRANSFORMS_HPP
#define DOMCLO_TRANSFORMS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "domclo/closure.hpp"
#include "domclo/error.hpp"
#include "domclo/operators.hpp"
#include "domclo/properties.hpp"
#include "domclo/setcore.hpp"

namespace domclo {

/// Total map 2^S -> 2^S' stored as one image per source subset.
class Transformation {
 public:
  Transformation() = default;

  Transformation(GroundSet source, GroundSet target, std::vector<Subset> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    require_table_capacity(source_, "transformation");
    require_table_capacity(target_, "transformation");
    if (images_.size() != source_.power_size()) {
      throw ValidationError("transformation needs exactly " + std::to_string(source_.power_size()) +
                            " images, got " + std::to_string(images_.size()));
    }
    for (Subset img : images_) {
      if (!target_.owns(img)) throw ValidationError("transformation image has members outside the target ground set");
    }
  }

  /// Map extended from singleton images; the empty set maps to `empty_image`.
  static Transformation extended(GroundSet source, GroundSet target, const std::vector<Subset>& singletons,
                                 Subset empty_image = Subset()) {
    if (static_cast<int>(singletons.size()) != source.size()) {
      throw ValidationError("extended transformation needs one image per source element");
    }
    require_table_capacity(source, "transformation");
    std::vector<Subset> images(source.power_size());
    for (Mask x = 0; x < images.size(); ++x) {
      if (x == 0) {
        images[x] = empty_image;
        continue;
      }
      Subset out;
      Subset(x).for_each_element([&](int i) { out = out | singletons[i]; });
      images[x] = out;
    }
    return Transformation(std::move(source), std::move(target), std::move(images));
  }

  static Transformation identity(const GroundSet& ground) {
    std::vector<Subset> images(ground.power_size());
    for (Mask x = 0; x < images.size(); ++x) images[x] = Subset(x);
    return Transformation(ground, ground, std::move(images));
  }

  /// An operator viewed as a self-map of its ground set.
  static Transformation from_operator(const Operator& op) {
    return Transformation(op.ground(), op.ground(), op.table());
  }

  /// X maps to X, for S whose labels all occur in S'.
  static Transformation inclusion(const GroundSet& source, const GroundSet& target) {
    std::vector<int> where;
    for (const auto& name : source.labels()) {
      auto idx = target.index_of(name);
      if (!idx) throw ValidationError("inclusion: element '" + name + "' is missing from the target");
      where.push_back(*idx);
    }
    std::vector<Subset> singles;
    for (int idx : where) singles.push_back(Subset::singleton(idx));
    return extended(source, target, singles);
  }

  /// Y' maps to Y' intersected with S, for S whose labels all occur in S'.
  static Transformation restriction(const GroundSet& source, const GroundSet& target) {
    std::vector<Subset> singles;
    for (const auto& name : source.labels()) {
      auto idx = target.index_of(name);
      singles.push_back(idx ? Subset::singleton(*idx) : Subset());
    }
    return extended(source, target, singles);
  }

  const GroundSet& source() const { return source_; }
  const GroundSet& target() const { return target_; }
  const std::vector<Subset>& images() const { return images_; }

  Subset apply(Subset x) const {
    require_owned(source_, x);
    return images_[x.bits()];
  }
  Subset operator()(Subset x) const { return apply(x); }

  friend bool operator==(const Transformation&, const Transformation&) = default;

 private:
  GroundSet source_;
  GroundSet target_;
  std::vector<Subset> images_;
};

/// Pointwise composition: X maps to X.f.g.
inline Transformation compose_maps(const Transformation& f, const Transformation& g) {
  if (!(f.target() == g.source())) throw UsageError("compose_maps: target of f is not the source of g");
  std::vector<Subset> images(f.images().size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = g.images()[f.images()[x].bits()];
  return Transformation(f.source(), g.target(), std::move(images));
}

/// X within Y implies X.f within Y.f, checked on covering pairs. Also
/// confirms the consequence that Y.f empty forces X.f empty below Y.
inline PropertyReport is_monotone_map(const Transformation& f) {
  PropertyReport r;
  r.property = "monotone";
  const auto& s = f.source();
  const auto& t = f.target();
  const auto& img = f.images();
  for_each_covering_pair(s.size(), [&](Subset x, int e) {
    ++r.checked;
    const Subset up = x.with(e);
    if (img[x.bits()].subset_of(img[up.bits()])) return true;
    detail::fail(r, {x, up},
                 format_subset(x, s) + " maps to " + format_subset(img[x.bits()], t) + " but " + format_subset(up, s) +
                     " maps to " + format_subset(img[up.bits()], t));
    return false;
  });
  if (!r) return r;
  for (Subset y : powerset(s)) {
    if (!img[y.bits()].empty()) continue;
    for_each_subset_of(y, [&](Subset x) {
      if (r && !img[x.bits()].empty()) {
        detail::fail(r, {x, y}, format_subset(y, s) + " maps to {} but its subset " + format_subset(x, s) + " does not");
      }
    });
    if (!r) return r;
  }
  return r;
}

namespace detail {

inline void check_operator_on(const Operator& op, const GroundSet& ground, std::string_view role) {
  if (!(op.ground() == ground)) {
    throw UsageError(std::string(role) + " operator is defined on a different ground set");
  }
}

}  // namespace detail

/// Y.alpha.f within Y.f.alpha' for all Y.
inline PropertyReport is_continuous(const Transformation& f, const Operator& alpha, const Operator& alpha_target) {
  detail::check_operator_on(alpha, f.source(), "source");
  detail::check_operator_on(alpha_target, f.target(), "target");
  PropertyReport r;
  r.property = "continuous";
  const auto& s = f.source();
  const auto& t = f.target();
  for (Subset y : powerset(s)) {
    ++r.checked;
    const Subset lhs = f(alpha(y));
    const Subset rhs = alpha_target(f(y));
    if (!lhs.subset_of(rhs)) {
      detail::fail(r, {y},
                   "Y=" + format_subset(y, s) + ": Y.a.f = " + format_subset(lhs, t) + " is not within Y.f.a' = " +
                       format_subset(rhs, t));
      return r;
    }
  }
  return r;
}

enum class PreservationTest {
  equality,   // Y.alpha.f = Y.f.alpha'
  inclusion,  // Y.f.alpha' within Y.alpha.f
};

inline PropertyReport is_preserving(const Transformation& f, const Operator& alpha, const Operator& alpha_target,
                                    PreservationTest test = PreservationTest::equality) {
  detail::check_operator_on(alpha, f.source(), "source");
  detail::check_operator_on(alpha_target, f.target(), "target");
  PropertyReport r;
  r.property = test == PreservationTest::equality ? "preserving" : "preserving-inclusion";
  const auto& s = f.source();
  const auto& t = f.target();
  for (Subset y : powerset(s)) {
    ++r.checked;
    const Subset via_source = f(alpha(y));
    const Subset via_target = alpha_target(f(y));
    const bool ok = test == PreservationTest::equality ? via_source == via_target : via_target.subset_of(via_source);
    if (!ok) {
      detail::fail(r, {y},
                   "Y=" + format_subset(y, s) + ": Y.a.f = " + format_subset(via_source, t) + ", Y.f.a' = " +
                       format_subset(via_target, t));
      return r;
    }
  }
  return r;
}

/// Holds iff the equality and inclusion forms of preservation give the same
/// verdict. The detail names both verdicts when they differ.
inline PropertyReport preservation_forms_agree(const Transformation& f, const Operator& delta,
                                               const Operator& delta_target) {
  const auto eq = is_preserving(f, delta, delta_target, PreservationTest::equality);
  const auto inc = is_preserving(f, delta, delta_target, PreservationTest::inclusion);
  PropertyReport r;
  r.property = "preservation-forms-agree";
  r.checked = eq.checked + inc.checked;
  if (eq.holds != inc.holds) {
    const auto& failing = eq.holds ? inc : eq;
    detail::fail(r, failing.witness,
                 std::string("equality form ") + (eq.holds ? "holds" : "fails") + ", inclusion form " +
                     (inc.holds ? "holds" : "fails") + "; " + failing.detail);
  }
  return r;
}

/// Every Delta'-set (member of the image of Delta') has a preimage under f.
inline PropertyReport is_delta_surjective(const Transformation& f, const Operator& delta_target) {
  detail::check_operator_on(delta_target, f.target(), "target");
  PropertyReport r;
  r.property = "delta-surjective";
  const auto& t = f.target();
  std::vector<bool> hit(t.power_size(), false);
  for (Subset img : f.images()) hit[img.bits()] = true;
  std::vector<bool> seen(t.power_size(), false);
  for (Subset y : powerset(t)) {
    const Subset target_set = delta_target(y);
    if (seen[target_set.bits()]) continue;
    seen[target_set.bits()] = true;
    ++r.checked;
    if (!hit[target_set.bits()]) {
      detail::fail(r, {target_set}, {1}, "Delta-set " + format_subset(target_set, t) + " has no preimage");
      return r;
    }
  }
  return r;
}

/// Every Delta'-set is the image of some Delta-set.
inline PropertyReport has_delta_set_preimages(const Transformation& f, const Operator& delta,
                                              const Operator& delta_target) {
  detail::check_operator_on(delta, f.source(), "source");
  detail::check_operator_on(delta_target, f.target(), "target");
  PropertyReport r;
  r.property = "delta-set-preimages";
  const auto& t = f.target();
  std::vector<bool> hit(t.power_size(), false);
  for (Subset y : powerset(f.source())) hit[f(delta(y)).bits()] = true;
  std::vector<bool> seen(t.power_size(), false);
  for (Subset y : powerset(t)) {
    const Subset target_set = delta_target(y);
    if (seen[target_set.bits()]) continue;
    seen[target_set.bits()] = true;
    ++r.checked;
    if (!hit[target_set.bits()]) {
      detail::fail(r, {target_set}, {1}, "Delta-set " + format_subset(target_set, t) + " is not the image of a Delta-set");
      return r;
    }
  }
  return r;
}

/// X.Delta = Y.Delta implies X.f.Delta' = Y.f.Delta'.
inline PropertyReport generator_transport(const Transformation& f, const Operator& delta,
                                          const Operator& delta_target) {
  detail::check_operator_on(delta, f.source(), "source");
  detail::check_operator_on(delta_target, f.target(), "target");
  PropertyReport r;
  r.property = "generator-transport";
  const auto& s = f.source();
  const auto& t = f.target();
  const auto all = powerset(s);
  for (Subset x : all) {
    const Subset dx = delta(x);
    const Subset fx = delta_target(f(x));
    for (Subset y : all) {
      ++r.checked;
      if (delta(y) != dx) continue;
      const Subset fy = delta_target(f(y));
      if (fx != fy) {
        detail::fail(r, {x, y},
                     format_subset(x, s) + " and " + format_subset(y, s) + " share the region " + format_subset(dx, s) +
                         " but X.f.D' = " + format_subset(fx, t) + " and Y.f.D' = " + format_subset(fy, t));
        return r;
      }
    }
  }
  return r;
}

/// For all X, Y': X.f within Y' iff X within Y'.g.
inline PropertyReport galois_adjunction(const Transformation& f, const Transformation& g) {
  PropertyReport r;
  r.property = "galois-adjunction";
  const auto& s = f.source();
  const auto& t = f.target();
  for (Subset x : powerset(s)) {
    for (Subset y : powerset(t)) {
      ++r.checked;
      const bool left = f(x).subset_of(y);
      const bool right = x.subset_of(g(y));
      if (left != right) {
        detail::fail(r, {x, y}, {0, 1},
                     "X=" + format_subset(x, s) + ", Y'=" + format_subset(y, t) + ": X.f within Y' is " +
                         (left ? "true" : "false") + " but X within Y'.g is " + (right ? "true" : "false"));
        return r;
      }
    }
  }
  return r;
}

namespace detail {

inline void check_pair_shape(const Transformation& f, const Transformation& g) {
  if (!(f.target() == g.source()) || !(g.target() == f.source())) {
    throw UsageError("galois: f must map S to S' and g must map S' back to S");
  }
}

}  // namespace detail

/// Monotone f: S -> S' and g: S' -> S with f.g expansive on S and g.f
/// contractive on S'. The adjunction form is evaluated as well; for monotone
/// maps the two verdicts must coincide, and a disagreement throws
/// std::logic_error.
inline PropertyReport is_galois(const Transformation& f, const Transformation& g) {
  detail::check_pair_shape(f, g);
  PropertyReport r;
  r.property = "galois";
  const auto& s = f.source();
  const auto& t = f.target();
  auto mark = [&](const PropertyReport& part, std::uint8_t side, std::string what) {
    r.checked += part.checked;
    if (!part && r) detail::fail(r, part.witness, std::vector<std::uint8_t>(part.witness.size(), side), what + ": " + part.detail);
  };
  const auto mf = is_monotone_map(f);
  const auto mg = is_monotone_map(g);
  mark(mf, 0, "f is not monotone");
  mark(mg, 1, "g is not monotone");
  PropertyReport expansive;
  for (Subset x : powerset(s)) {
    ++expansive.checked;
    const Subset back = g(f(x));
    if (!x.subset_of(back)) {
      detail::fail(expansive, {x}, format_subset(x, s) + ".f.g = " + format_subset(back, s));
      break;
    }
  }
  mark(expansive, 0, "f.g is not expansive");
  PropertyReport contractive;
  for (Subset y : powerset(t)) {
    ++contractive.checked;
    const Subset back = f(g(y));
    if (!back.subset_of(y)) {
      detail::fail(contractive, {y}, format_subset(y, t) + ".g.f = " + format_subset(back, t));
      break;
    }
  }
  mark(contractive, 1, "g.f is not contractive");
  if (mf && mg) {
    const bool axioms = expansive.holds && contractive.holds;
    if (axioms != galois_adjunction(f, g).holds) {
      throw std::logic_error("galois: axiom form and adjunction form disagree on a monotone pair");
    }
  }
  return r;
}

struct GaloisPair {
  Transformation f;  // S -> S'
  Transformation g;  // S' -> S
};

inline GaloisPair make_galois_pair(Transformation f, Transformation g) {
  auto r = is_galois(f, g);
  if (!r) throw PreconditionError("not a Galois connection; " + r.detail);
  return {std::move(f), std::move(g)};
}

/// The closure X -> X.f.g on S.
inline Operator galois_closure(const GaloisPair& pair) {
  auto r = is_galois(pair.f, pair.g);
  if (!r) throw PreconditionError("galois closure needs a Galois connection; " + r.detail);
  return table_operator(pair.f.source(), compose_maps(pair.f, pair.g).images());
}

/// f.g.f = f and g.f.g = g pointwise.
inline PropertyReport galois_identities(const GaloisPair& pair) {
  PropertyReport r;
  r.property = "galois-identities";
  const auto& f = pair.f;
  const auto& g = pair.g;
  for (Subset x : powerset(f.source())) {
    ++r.checked;
    if (f(g(f(x))) != f(x)) {
      detail::fail(r, {x}, format_subset(x, f.source()) + ".f.g.f differs from its f image");
      return r;
    }
  }
  for (Subset y : powerset(f.target())) {
    ++r.checked;
    if (g(f(g(y))) != g(y)) {
      detail::fail(r, {y}, {1}, format_subset(y, f.target()) + ".g.f.g differs from its g image");
      return r;
    }
  }
  return r;
}

/// Every monotone map 2^S -> 2^T, in a fixed order. Grows as the number of
/// monotone Boolean functions to the power |T|; meant for |S|, |T| <= 3.
inline std::vector<Transformation> monotone_maps(const GroundSet& source, const GroundSet& target) {
  if (source.size() > 3 || target.size() > 3) {
    throw CapacityError("monotone map enumeration needs |S|, |S'| <= 3");
  }
  const auto order = canonical_order(source.size());
  const Subset full = target.full();
  std::vector<Subset> images(source.power_size());
  std::vector<Transformation> out;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      out.emplace_back(source, target, images);
      return;
    }
    const Subset x = order[pos];
    Subset lo;
    x.for_each_element([&](int e) { lo = lo | images[x.without(e).bits()]; });
    for_each_subset_of(full - lo, [&](Subset extra) {
      images[x.bits()] = lo | extra;
      self(self, pos + 1);
    });
  };
  rec(rec, 0);
  return out;
}

/// No monotone g' other than g pairs with f, and no monotone f' other than f
/// pairs with g. Exhaustive; |S|, |S'| <= 3.
inline PropertyReport galois_unique_adjoint(const Transformation& f, const Transformation& g) {
  detail::check_pair_shape(f, g);
  PropertyReport r;
  r.property = "unique-adjoint";
  auto galois_tables = [](const std::vector<Subset>& fi, const std::vector<Subset>& gi) {
    for (Mask x = 0; x < fi.size(); ++x) {
      if (!Subset(x).subset_of(gi[fi[x].bits()])) return false;
    }
    for (Mask y = 0; y < gi.size(); ++y) {
      if (!fi[gi[y].bits()].subset_of(Subset(y))) return false;
    }
    return true;
  };
  for (const auto& alt : monotone_maps(f.target(), f.source())) {
    ++r.checked;
    if (alt.images() != g.images() && galois_tables(f.images(), alt.images())) {
      detail::fail(r, {}, "a second right adjoint pairs with f");
      return r;
    }
  }
  for (const auto& alt : monotone_maps(f.source(), f.target())) {
    ++r.checked;
    if (alt.images() != f.images() && galois_tables(alt.images(), g.images())) {
      detail::fail(r, {}, "a second left adjoint pairs with g");
      return r;
    }
  }
  return r;
}

/// (f.h, k.g) from S <-> S' and S' <-> S''.
inline GaloisPair compose_galois(const GaloisPair& first, const GaloisPair& second) {
  if (!(first.f.target() == second.f.source())) {
    throw UsageError("compose_galois: the pairs do not share the middle ground set");
  }
  return make_galois_pair(compose_maps(first.f, second.f), compose_maps(second.g, first.g));
}

/// Y maps to the unique minimal generator of Y.Delta. Throws
/// PreconditionError ("gamma is not a function") when some Y.Delta has
/// several minimal generators.
inline Transformation gamma_map(const Operator& delta) {
  const auto& ground = delta.ground();
  require_table_capacity(ground, "gamma map");
  const auto table = delta.table();
  std::vector<std::vector<Subset>> preimages(table.size());
  for (Subset x : powerset(ground)) preimages[table[x.bits()].bits()].push_back(x);
  std::vector<Subset> images(table.size());
  for (Subset y : powerset(ground)) {
    const auto minimal = detail::minimal_members(preimages[table[y.bits()].bits()]);
    if (minimal.size() != 1) {
      throw PreconditionError("gamma is not a function: " + format_subset(table[y.bits()], ground) + " has minimal generators " +
                              format_family(minimal, ground));
    }
    images[y.bits()] = minimal[0];
  }
  return Transformation(ground, ground, std::move(images));
}

/// The two conditions relating Delta and gamma: Y within Y.gamma.Delta, and
/// Y.Delta.gamma within Y.
inline PropertyReport gamma_delta_conditions(const Operator& delta) {
  PropertyReport r;
  r.property = "gamma-delta-conditions";
  const auto& ground = delta.ground();
  const auto gm = gamma_map(delta);
  for (Subset y : powerset(ground)) {
    ++r.checked;
    const Subset up = delta(gm(y));
    if (!y.subset_of(up)) {
      detail::fail(r, {y}, format_subset(y, ground) + ".gamma.Delta = " + format_subset(up, ground));
      return r;
    }
    const Subset down = gm(delta(y));
    if (!down.subset_of(y)) {
      detail::fail(r, {y}, format_subset(y, ground) + ".Delta.gamma = " + format_subset(down, ground));
      return r;
    }
  }
  return r;
}

}  // namespace domclo

#endif  // DOMCLO_TRANSFORMS_HPP
