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

/// @file io.hpp
/// JSON system documents and report serialization.
///
/// Document shape:
///
///   {"ground": ["a","b"],
///    "operator": {"kind": "extended",
///                 "singletons": {"a": ["a","b"], "b": ["b"]},
///                 "overrides": {"a,b": ["a","b"]},
///                 "empty": []},
///    "map": {...}}
///
/// Operator kinds: table, extended, poset-downset, star, family, adjacency,
/// identity. Subset keys join labels with commas; the writer uses ground
/// order and the reader accepts any order. The optional "map" block describes
/// a transformation from this ground set to the ground set of a second
/// document (kinds table, extended, identity, inclusion, restriction).

#ifndef DOMCLO_IO_HPP
#define DOMCLO_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "domclo/error.hpp"
#include "domclo/operators.hpp"
#include "domclo/properties.hpp"
#include "domclo/setcore.hpp"
#include "domclo/transforms.hpp"

namespace domclo {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string join_path(std::string_view path, std::string_view field) {
  return path.empty() ? std::string(field) : std::string(path) + "." + std::string(field);
}

[[noreturn]] inline void bad(std::string_view path, const std::string& what) {
  throw ValidationError(std::string(path) + ": " + what);
}

inline const Json& field(const Json& obj, std::string_view path, const char* name) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) bad(join_path(path, name), "missing");
  return *it;
}

inline Subset subset_from_json(const Json& j, const GroundSet& ground, std::string_view path) {
  if (!j.is_array()) bad(path, "expected an array of labels");
  Subset out;
  for (const auto& item : j) {
    if (!item.is_string()) bad(path, "labels must be strings");
    auto idx = ground.index_of(item.get<std::string>());
    if (!idx) bad(path, "unknown label '" + item.get<std::string>() + "'");
    out = out.with(*idx);
  }
  return out;
}

inline Subset subset_from_key(const std::string& key, const GroundSet& ground, std::string_view path) {
  try {
    return parse_subset(key, ground);
  } catch (const InputError& e) {
    bad(join_path(path, "\"" + key + "\""), e.what());
  }
}

inline Json subset_to_json(Subset s, const GroundSet& ground) {
  Json arr = Json::array();
  for (const auto& name : subset_labels(s, ground)) arr.push_back(name);
  return arr;
}

// Reads a {key: [labels]} object into a full table over 2^source.
inline std::vector<Subset> table_from_json(const Json& images, const GroundSet& source, const GroundSet& target,
                                           std::string_view path) {
  if (!images.is_object()) bad(path, "expected an object keyed by subsets");
  std::vector<Subset> table(source.power_size());
  std::vector<bool> seen(source.power_size(), false);
  for (auto it = images.begin(); it != images.end(); ++it) {
    const Subset key = subset_from_key(it.key(), source, path);
    if (seen[key.bits()]) bad(path, "subset " + format_subset(key, source) + " listed twice");
    seen[key.bits()] = true;
    table[key.bits()] = subset_from_json(it.value(), target, join_path(path, "\"" + it.key() + "\""));
  }
  for (Subset x : powerset(source)) {
    if (!seen[x.bits()]) bad(path, "no image for " + format_subset(x, source));
  }
  return table;
}

inline std::vector<Subset> singletons_from_json(const Json& obj, const GroundSet& source, const GroundSet& target,
                                                std::string_view path) {
  if (!obj.is_object()) bad(path, "expected an object keyed by labels");
  std::vector<Subset> singles(static_cast<std::size_t>(source.size()));
  std::vector<bool> seen(singles.size(), false);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    auto idx = source.index_of(it.key());
    if (!idx) bad(path, "unknown label '" + it.key() + "'");
    if (seen[*idx]) bad(path, "label '" + it.key() + "' listed twice");
    seen[*idx] = true;
    singles[*idx] = subset_from_json(it.value(), target, join_path(path, it.key()));
  }
  for (int i = 0; i < source.size(); ++i) {
    if (!seen[i]) bad(path, "no image for '" + source.label(i) + "'");
  }
  return singles;
}

inline Json table_to_json(const std::vector<Subset>& table, const GroundSet& source, const GroundSet& target) {
  Json images = Json::object();
  for (Subset x : powerset(source)) images[subset_key(x, source)] = subset_to_json(table[x.bits()], target);
  return images;
}

inline std::string line_context(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace detail

inline GroundSet ground_from_json(const Json& doc) {
  const Json& g = detail::field(doc, "", "ground");
  if (!g.is_array()) detail::bad("ground", "expected an array of labels");
  std::vector<std::string> labels;
  for (const auto& item : g) {
    if (!item.is_string()) detail::bad("ground", "labels must be strings");
    labels.push_back(item.get<std::string>());
  }
  try {
    return GroundSet(std::move(labels));
  } catch (const Error& e) {
    detail::bad("ground", e.what());
  }
}

/// `path` prefixes field names in error messages; nested specs extend it.
inline Operator operator_from_json(const Json& spec, const GroundSet& ground, const std::string& path = "operator") {
  if (!spec.is_object()) detail::bad(path, "expected an object");
  const Json& kind_field = detail::field(spec, path, "kind");
  if (!kind_field.is_string()) detail::bad(path + ".kind", "expected a string");
  const std::string kind = kind_field.get<std::string>();
  try {
    if (kind == "table") {
      return table_operator(ground, detail::table_from_json(detail::field(spec, path, "images"), ground, ground,
                                                            path + ".images"));
    }
    if (kind == "extended") {
      auto singles = detail::singletons_from_json(detail::field(spec, path, "singletons"), ground, ground,
                                                  path + ".singletons");
      std::vector<std::pair<Subset, Subset>> overrides;
      if (auto it = spec.find("overrides"); it != spec.end()) {
        if (!it->is_object()) detail::bad(path + ".overrides", "expected an object keyed by subsets");
        for (auto o = it->begin(); o != it->end(); ++o) {
          const Subset key = detail::subset_from_key(o.key(), ground, path + ".overrides");
          overrides.emplace_back(
              key, detail::subset_from_json(o.value(), ground, path + ".overrides.\"" + o.key() + "\""));
        }
      }
      Subset empty;
      if (auto it = spec.find("empty"); it != spec.end()) empty = detail::subset_from_json(*it, ground, path + ".empty");
      return extended_operator(ground, std::move(singles), std::move(overrides), empty);
    }
    if (kind == "poset-downset") {
      const Json& rel = detail::field(spec, path, "relations");
      if (!rel.is_array()) detail::bad(path + ".relations", "expected an array of [lower, upper] pairs");
      std::vector<std::pair<int, int>> pairs;
      for (const auto& p : rel) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
          detail::bad(path + ".relations", "each relation is a [lower, upper] pair of labels");
        }
        auto lo = ground.index_of(p[0].get<std::string>());
        auto hi = ground.index_of(p[1].get<std::string>());
        if (!lo || !hi) detail::bad(path + ".relations", "unknown label in " + p.dump());
        pairs.emplace_back(*lo, *hi);
      }
      return downset_operator(std::move(pairs), ground);
    }
    if (kind == "star") {
      const Json& s = detail::field(spec, path, "star");
      if (!s.is_string()) detail::bad(path + ".star", "expected a label");
      auto idx = ground.index_of(s.get<std::string>());
      if (!idx) detail::bad(path + ".star", "unknown label '" + s.get<std::string>() + "'");
      bool flag = false;
      if (auto it = spec.find("empty_maps_to_star"); it != spec.end()) {
        if (!it->is_boolean()) detail::bad(path + ".empty_maps_to_star", "expected a boolean");
        flag = it->get<bool>();
      }
      return star_operator(ground, *idx, flag);
    }
    if (kind == "family") {
      const Json& fam = detail::field(spec, path, "closed");
      if (!fam.is_array()) detail::bad(path + ".closed", "expected an array of label arrays");
      std::vector<Subset> sets;
      for (std::size_t i = 0; i < fam.size(); ++i) {
        sets.push_back(detail::subset_from_json(fam[i], ground, path + ".closed[" + std::to_string(i) + "]"));
      }
      return from_family(ground, SubsetFamily(std::move(sets)));
    }
    if (kind == "adjacency") {
      const Json& m = detail::field(spec, path, "matrix");
      if (!m.is_array()) detail::bad(path + ".matrix", "expected an array of rows");
      std::vector<std::vector<int>> rows;
      for (const auto& row : m) {
        if (!row.is_array()) detail::bad(path + ".matrix", "each row is an array of 0/1 entries");
        std::vector<int> r;
        for (const auto& v : row) {
          if (!v.is_number_integer()) detail::bad(path + ".matrix", "entries must be integers");
          r.push_back(v.get<int>());
        }
        rows.push_back(std::move(r));
      }
      return from_adjacency(std::move(rows), ground);
    }
    if (kind == "identity") return identity_operator(ground);
    if (kind == "compose") {
      const Operator first = operator_from_json(detail::field(spec, path, "first"), ground, path + ".first");
      const Operator second = operator_from_json(detail::field(spec, path, "second"), ground, path + ".second");
      return compose(first, second);
    }
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    detail::bad(path, e.what());
  }
  detail::bad(path + ".kind", "unknown kind '" + kind + "'");
}

/// Native form for file kinds; anything else is written as a table.
inline Json operator_to_json(const Operator& op) {
  const auto& g = op.ground();
  Json j = Json::object();
  j["kind"] = std::string(to_string(op.kind()));
  const auto& spec = spec_of(op);
  if (const auto* e = std::get_if<ExtendedSpec>(&spec)) {
    Json singles = Json::object();
    for (int i = 0; i < g.size(); ++i) singles[g.label(i)] = detail::subset_to_json(e->singletons[i], g);
    j["singletons"] = singles;
    auto sorted = e->overrides;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return CanonicalLess{}(a.first, b.first); });
    Json ov = Json::object();
    for (const auto& [k, v] : sorted) ov[subset_key(k, g)] = detail::subset_to_json(v, g);
    j["overrides"] = ov;
    j["empty"] = detail::subset_to_json(e->empty_image, g);
  } else if (const auto* d = std::get_if<DownsetSpec>(&spec)) {
    Json rel = Json::array();
    for (const auto& [lo, hi] : d->relations) rel.push_back(Json::array({g.label(lo), g.label(hi)}));
    j["relations"] = rel;
  } else if (const auto* s = std::get_if<StarSpec>(&spec)) {
    j["star"] = g.label(s->star);
    j["empty_maps_to_star"] = s->empty_maps_to_star;
  } else if (const auto* f = std::get_if<FamilySpec>(&spec)) {
    Json fam = Json::array();
    for (Subset c : f->closed) fam.push_back(detail::subset_to_json(c, g));
    j["closed"] = fam;
  } else if (const auto* a = std::get_if<AdjacencySpec>(&spec)) {
    j["matrix"] = a->matrix;
  } else if (const auto* c = std::get_if<ComposeSpec>(&spec)) {
    j["first"] = operator_to_json(c->first);
    j["second"] = operator_to_json(c->second);
  } else if (std::holds_alternative<IdentitySpec>(spec)) {
  } else {
    j["kind"] = "table";
    j["images"] = detail::table_to_json(op.table(), g, g);
  }
  if (const auto* t = std::get_if<TableSpec>(&spec)) j["images"] = detail::table_to_json(t->images, g, g);
  return j;
}

inline Transformation map_from_json(const Json& spec, const GroundSet& source, const GroundSet& target) {
  constexpr std::string_view path = "map";
  const Json& kind_field = detail::field(spec, path, "kind");
  if (!kind_field.is_string()) detail::bad("map.kind", "expected a string");
  const std::string kind = kind_field.get<std::string>();
  try {
    if (kind == "table") {
      return Transformation(source, target,
                            detail::table_from_json(detail::field(spec, path, "images"), source, target, "map.images"));
    }
    if (kind == "extended") {
      auto singles = detail::singletons_from_json(detail::field(spec, path, "singletons"), source, target,
                                                  "map.singletons");
      Subset empty;
      if (auto it = spec.find("empty"); it != spec.end()) empty = detail::subset_from_json(*it, target, "map.empty");
      return Transformation::extended(source, target, singles, empty);
    }
    if (kind == "identity") {
      if (!(source == target)) detail::bad("map.kind", "identity needs equal ground sets");
      return Transformation::identity(source);
    }
    if (kind == "inclusion") return Transformation::inclusion(source, target);
    if (kind == "restriction") return Transformation::restriction(source, target);
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    detail::bad(path, e.what());
  }
  detail::bad("map.kind", "unknown kind '" + kind + "'");
}

inline Json map_to_json(const Transformation& f) {
  Json j = Json::object();
  j["kind"] = "table";
  j["images"] = detail::table_to_json(f.images(), f.source(), f.target());
  return j;
}

/// One parsed document. `map` is kept raw until the target ground is known.
struct SystemDocument {
  GroundSet ground;
  Operator op;
  std::optional<Json> map;
};

inline Json parse_json_text(std::string_view text, std::string_view origin) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string(origin) + ": malformed JSON at " + detail::line_context(text, e.byte) + ": " +
                     e.what());
  }
}

inline SystemDocument system_from_json(const Json& doc) {
  if (!doc.is_object()) detail::bad("document", "expected an object");
  SystemDocument out{ground_from_json(doc), Operator(), std::nullopt};
  out.op = operator_from_json(detail::field(doc, "", "operator"), out.ground);
  if (auto it = doc.find("map"); it != doc.end()) out.map = *it;
  return out;
}

inline SystemDocument parse_system(std::string_view text, std::string_view origin = "<input>") {
  const Json doc = parse_json_text(text, origin);
  try {
    return system_from_json(doc);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(origin) + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SystemDocument load_system(const std::string& path) { return parse_system(read_file(path), path); }

inline Json system_to_json(const Operator& op, const Transformation* map = nullptr) {
  Json doc = Json::object();
  doc["ground"] = op.ground().labels();
  doc["operator"] = operator_to_json(op);
  if (map != nullptr) doc["map"] = map_to_json(*map);
  return doc;
}

/// `target` formats witness sets marked as target-side; checks on maps
/// between different ground sets need it.
inline Json report_to_json(const PropertyReport& r, const GroundSet& ground, const GroundSet* target = nullptr) {
  Json j = Json::object();
  j["property"] = r.property;
  j["holds"] = r.holds;
  j["mode"] = std::string(to_string(r.mode));
  j["checked"] = r.checked;
  Json w = Json::array();
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    const bool far = i < r.witness_side.size() && r.witness_side[i] != 0;
    if (far && target == nullptr) throw UsageError("report_to_json: witness of '" + r.property + "' needs the target ground");
    w.push_back(format_subset(r.witness[i], far ? *target : ground));
  }
  j["witness"] = w;
  j["detail"] = r.detail;
  return j;
}

}  // namespace domclo

#endif  // DOMCLO_IO_HPP
