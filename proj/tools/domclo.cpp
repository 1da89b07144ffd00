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

// Command-line front end. Exit status: 0 holds, 1 fails or counterexample
// found, 2 usage or validation error.

#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "domclo/domclo.hpp"

namespace {

using namespace domclo;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInvalid = 2;

const char* mark(bool ok) { return ok ? "✓" : "✗"; }

struct Output {
  bool quiet = false;
  Json doc = Json::object();

  int finish(int code) const {
    if (quiet) std::cout << doc.dump() << "\n";
    return code;
  }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

PropertyReport run_property(const Operator& op, const std::string& name) {
  static const std::vector<std::pair<std::string, std::function<PropertyReport(const Operator&)>>> table = {
      {"expansive", is_expansive},
      {"contractive", is_contractive},
      {"monotone", is_monotone},
      {"idempotent", is_idempotent},
      {"extended", is_extended},
      {"path-independent", [](const Operator& o) { return is_path_independent(o); }},
      {"dominating", is_dominating},
      {"closure", is_closure},
      {"uniquely-generated", is_uniquely_generated},
      {"transitively-closed", is_transitively_closed},
      {"region-stable", is_region_stable},
      {"matroid", is_matroid},
      {"antimatroid", is_antimatroid},
      {"topological", is_topological},
  };
  for (const auto& [key, fn] : table) {
    if (key != name) continue;
    try {
      return fn(op);
    } catch (const PreconditionError& e) {
      PropertyReport r;
      r.property = name;
      r.holds = false;
      r.detail = e.what();
      return r;
    }
  }
  throw UsageError("unknown property '" + name + "'");
}

void print_report(const PropertyReport& r, const GroundSet& g) {
  std::cout << r.property << " " << mark(r.holds);
  if (!r.holds) {
    if (!r.witness.empty()) {
      std::cout << " witness";
      for (Subset s : r.witness) std::cout << " " << format_subset(s, g);
    }
    std::cout << ": " << r.detail;
  }
  if (r.mode == CheckMode::sampled) std::cout << " (sampled)";
  std::cout << "\n";
}

Operator pick_operator(const SystemDocument& doc, bool dominated) {
  return dominated ? dominated_closure(doc.op) : doc.op;
}

Transformation require_map(const SystemDocument& from, const SystemDocument& to, const std::string& file) {
  if (!from.map) throw ValidationError(file + ": missing \"map\" block");
  try {
    return map_from_json(*from.map, from.ground, to.ground);
  } catch (const ValidationError& e) {
    throw ValidationError(file + ": " + e.what());
  }
}

int cmd_check(const std::string& file, const std::string& props, Output& out) {
  const auto doc = load_system(file);
  std::vector<std::string> names =
      props.empty() ? std::vector<std::string>{"expansive", "contractive", "monotone", "idempotent", "extended",
                                               "path-independent", "dominating", "closure", "uniquely-generated"}
                    : split_list(props);
  bool all = true;
  Json results = Json::array();
  for (const auto& name : names) {
    const auto r = run_property(doc.op, name);
    all = all && r.holds;
    if (out.quiet) {
      results.push_back(report_to_json(r, doc.ground));
    } else {
      print_report(r, doc.ground);
    }
  }
  out.doc["command"] = "check";
  out.doc["holds"] = all;
  out.doc["results"] = results;
  return out.finish(all ? kHolds : kFails);
}

int cmd_closure(const std::string& file, const std::string& set, const std::string& mode, Output& out) {
  const auto doc = load_system(file);
  const Subset y = parse_subset(set, doc.ground);
  const Operator eq1 = dominated_closure(doc.op, ClosureEvaluation::subset_union);
  const Operator eq2 = dominated_closure(doc.op, ClosureEvaluation::singleton_test);
  out.doc["command"] = "closure";
  out.doc["set"] = format_subset(y, doc.ground);
  if (mode == "eq1" || mode == "eq2") {
    const Subset img = (mode == "eq1" ? eq1 : eq2)(y);
    out.doc["closure"] = format_subset(img, doc.ground);
    if (!out.quiet) std::cout << format_subset(img, doc.ground) << "\n";
    return out.finish(kHolds);
  }
  const Subset a = eq1(y);
  const Subset b = eq2(y);
  out.doc["eq1"] = format_subset(a, doc.ground);
  out.doc["eq2"] = format_subset(b, doc.ground);
  out.doc["agree"] = a == b;
  if (!out.quiet) {
    std::cout << "eq1 " << format_subset(a, doc.ground) << "\n"
              << "eq2 " << format_subset(b, doc.ground) << "\n"
              << "agree " << mark(a == b) << "\n";
  }
  return out.finish(a == b ? kHolds : kFails);
}

int cmd_closed_sets(const std::string& file, Output& out) {
  const auto doc = load_system(file);
  const auto closed = closed_sets(dominated_closure(doc.op));
  Json arr = Json::array();
  for (Subset c : closed) {
    arr.push_back(format_subset(c, doc.ground));
    if (!out.quiet) std::cout << format_subset(c, doc.ground) << "\n";
  }
  out.doc["command"] = "closed-sets";
  out.doc["closed"] = arr;
  return out.finish(kHolds);
}

int cmd_generators(const std::string& file, const std::string& target, bool dominated, Output& out) {
  const auto doc = load_system(file);
  const Operator op = pick_operator(doc, dominated);
  const Subset z = parse_subset(target, doc.ground);
  const auto gs = generators(op, z);
  Json all = Json::array();
  Json minimal = Json::array();
  for (Subset x : gs.generators) all.push_back(format_subset(x, doc.ground));
  for (Subset x : gs.minimal) minimal.push_back(format_subset(x, doc.ground));
  out.doc["command"] = "generators";
  out.doc["target"] = format_subset(z, doc.ground);
  out.doc["generators"] = all;
  out.doc["minimal"] = minimal;
  if (!out.quiet) {
    std::cout << "generators " << format_family(gs.generators, doc.ground) << "\n"
              << "minimal " << format_family(gs.minimal, doc.ground) << "\n";
  }
  return out.finish(gs.is_image ? kHolds : kFails);
}

int cmd_gamma(const std::string& file, const std::string& set, bool dominated, Output& out) {
  const auto doc = load_system(file);
  const Operator op = pick_operator(doc, dominated);
  const Subset y = parse_subset(set, doc.ground);
  const auto mins = gamma(op, y);
  Json arr = Json::array();
  for (Subset x : mins) arr.push_back(format_subset(x, doc.ground));
  out.doc["command"] = "gamma";
  out.doc["set"] = format_subset(y, doc.ground);
  out.doc["image"] = format_subset(op(y), doc.ground);
  out.doc["minimal"] = arr;
  if (!out.quiet) std::cout << format_family(mins, doc.ground) << "\n";
  return out.finish(mins.size() == 1 ? kHolds : kFails);
}

int cmd_eta(const std::string& file, const std::string& set, Output& out) {
  const auto doc = load_system(file);
  const Subset y = parse_subset(set, doc.ground);
  const Subset n = eta(doc.op, y);
  out.doc["command"] = "eta";
  out.doc["set"] = format_subset(y, doc.ground);
  out.doc["eta"] = format_subset(n, doc.ground);
  if (!out.quiet) std::cout << format_subset(n, doc.ground) << "\n";
  return out.finish(kHolds);
}

int cmd_pullback(const std::string& file, Output& out) {
  const auto doc = load_system(file);
  const auto r = pullback_property(doc.op);
  Json w = Json::array();
  for (Subset s : r.witness) w.push_back(format_subset(s, doc.ground));
  out.doc["command"] = "pullback";
  out.doc["holds"] = r.holds;
  out.doc["witness"] = w;
  out.doc["detail"] = r.detail;
  if (!out.quiet) {
    std::cout << "pullback " << mark(r.holds);
    if (!r.holds) std::cout << " witness Z=" << w[0].get<std::string>() << " X=" << w[1].get<std::string>()
                            << " Y=" << w[2].get<std::string>() << ": " << r.detail;
    std::cout << "\n";
  }
  return out.finish(r.holds ? kHolds : kFails);
}

int cmd_galois(const std::string& file_s, const std::string& file_t, Output& out) {
  const auto s = load_system(file_s);
  const auto t = load_system(file_t);
  const Transformation f = require_map(s, t, file_s);
  const Transformation g = require_map(t, s, file_t);
  std::vector<PropertyReport> reports{is_galois(f, g)};
  if (reports[0]) {
    const GaloisPair pair{f, g};
    reports.push_back(galois_identities(pair));
    auto c = is_closure(galois_closure(pair));
    c.property = "galois-closure";
    reports.push_back(c);
    if (s.ground.size() <= 3 && t.ground.size() <= 3) reports.push_back(galois_unique_adjoint(f, g));
  }
  bool all = true;
  Json arr = Json::array();
  for (const auto& r : reports) {
    all = all && r.holds;
    arr.push_back(report_to_json(r, s.ground, &t.ground));
    if (!out.quiet) {
      std::cout << r.property << " " << mark(r.holds);
      if (!r.holds) std::cout << ": " << r.detail;
      std::cout << "\n";
    }
  }
  out.doc["command"] = "galois";
  out.doc["holds"] = all;
  out.doc["results"] = arr;
  return out.finish(all ? kHolds : kFails);
}

int cmd_continuity(const std::string& file_s, const std::string& file_t, Output& out) {
  const auto s = load_system(file_s);
  const auto t = load_system(file_t);
  const Transformation f = require_map(s, t, file_s);
  const auto cont = is_continuous(f, s.op, t.op);
  std::vector<PropertyReport> reports{is_monotone_map(f), cont, is_preserving(f, s.op, t.op),
                                      generator_transport(f, s.op, t.op), is_delta_surjective(f, t.op)};
  Json arr = Json::array();
  for (const auto& r : reports) {
    arr.push_back(report_to_json(r, s.ground, &t.ground));
    if (!out.quiet) {
      std::cout << r.property << " " << mark(r.holds);
      if (!r.holds) std::cout << ": " << r.detail;
      std::cout << "\n";
    }
  }
  out.doc["command"] = "continuity";
  out.doc["holds"] = cont.holds;
  out.doc["results"] = arr;
  return out.finish(cont.holds ? kHolds : kFails);
}

int cmd_enumerate(int n, const std::string& cls, Output& out) {
  const OperatorClass c = parse_operator_class(cls);
  const auto count = enumerate_class(n, c);
  out.doc["command"] = "enumerate";
  out.doc["class"] = cls;
  out.doc["n"] = n;
  out.doc["count"] = count;
  if (!out.quiet) std::cout << count << "\n";
  return out.finish(kHolds);
}

int cmd_search(const std::string& claim, const SearchConfig& cfg, Output& out) {
  const auto r = hunt(claim, cfg);
  out.doc = result_to_json(r);
  if (!out.quiet) {
    std::cout << r.claim << " (" << to_string(r.kind) << "): tested " << r.tested << " of " << r.budget << ", "
              << (r.found() ? "counterexample" : "no counterexample found") << "\n";
    if (r.found()) {
      std::cout << "candidate " << r.counterexample->index << ": " << r.counterexample->witness << "\n"
                << r.counterexample->instance.dump(2) << "\n";
    }
  }
  // Conjectures are exploratory; finding a counterexample is still reported.
  return out.finish(r.found() ? kFails : kHolds);
}

int cmd_verify(const SuiteOptions& options, Output& out) {
  const auto rep = run_reference_suite(options);
  Json arr = Json::array();
  for (const auto& e : rep.entries) {
    Json j = Json::object();
    j["name"] = e.name;
    j["passed"] = e.passed;
    j["informational"] = e.informational;
    j["detail"] = e.detail;
    arr.push_back(j);
    if (!out.quiet) {
      std::cout << (e.passed ? "✓ " : (e.informational ? "ℹ " : "✗ ")) << e.name;
      if (!e.detail.empty()) std::cout << ": " << e.detail;
      std::cout << "\n";
    }
  }
  out.doc["command"] = "verify-paper";
  out.doc["passed"] = rep.passed();
  out.doc["entries"] = arr;
  return out.finish(rep.passed() ? kHolds : kFails);
}

int cmd_normalize(const std::string& file) {
  const auto doc = load_system(file);
  Json j = system_to_json(doc.op);
  if (doc.map) j["map"] = *doc.map;
  std::cout << j.dump(2) << "\n";
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominating and closure operators on finite set systems"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--quiet,-q", out.quiet, "emit one canonical JSON document");

  std::string file, file2, props, set, mode = "eq2", target, cls, claim;
  bool dominated = false;
  int n = 4;
  SearchConfig cfg;
  SuiteOptions suite;
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "decide operator properties");
  check->add_option("file", file)->required();
  check->add_option("--props", props, "comma-separated property names");
  check->callback([&] { action = [&] { return cmd_check(file, props, out); }; });

  auto* closure = app.add_subcommand("closure", "dominated closure of a set");
  closure->add_option("file", file)->required();
  closure->add_option("--set", set)->required();
  closure->add_option("--mode", mode)->check(CLI::IsMember({"eq1", "eq2", "both"}));
  closure->callback([&] { action = [&] { return cmd_closure(file, set, mode, out); }; });

  auto* closed = app.add_subcommand("closed-sets", "closed sets of the dominated closure");
  closed->add_option("file", file)->required();
  closed->callback([&] { action = [&] { return cmd_closed_sets(file, out); }; });

  auto* gens = app.add_subcommand("generators", "generators of a target set");
  gens->add_option("file", file)->required();
  gens->add_option("--target", target)->required();
  gens->add_flag("--dominated", dominated, "use the dominated closure");
  gens->callback([&] { action = [&] { return cmd_generators(file, target, dominated, out); }; });

  auto* gam = app.add_subcommand("gamma", "minimal generators of Y.alpha");
  gam->add_option("file", file)->required();
  gam->add_option("--set", set)->required();
  gam->add_flag("--dominated", dominated, "use the dominated closure");
  gam->callback([&] { action = [&] { return cmd_gamma(file, set, dominated, out); }; });

  auto* et = app.add_subcommand("eta", "neighborhood Y.alpha - Y");
  et->add_option("file", file)->required();
  et->add_option("--set", set)->required();
  et->callback([&] { action = [&] { return cmd_eta(file, set, out); }; });

  auto* pb = app.add_subcommand("pullback", "intersection closure of generator families");
  pb->add_option("file", file)->required();
  pb->callback([&] { action = [&] { return cmd_pullback(file, out); }; });

  auto* gal = app.add_subcommand("galois", "check a pair of maps for a Galois connection");
  gal->add_option("source", file, "system whose map block is f")->required();
  gal->add_option("target", file2, "system whose map block is g")->required();
  gal->callback([&] { action = [&] { return cmd_galois(file, file2, out); }; });

  auto* cont = app.add_subcommand("continuity", "continuity and preservation of a map");
  cont->add_option("source", file, "system whose map block is f")->required();
  cont->add_option("target", file2)->required();
  cont->callback([&] { action = [&] { return cmd_continuity(file, file2, out); }; });

  auto* en = app.add_subcommand("enumerate", "count operators of a class");
  en->add_option("--n", n)->required();
  en->add_option("--class", cls)->required();
  en->callback([&] { action = [&] { return cmd_enumerate(n, cls, out); }; });

  auto* se = app.add_subcommand("search", "hunt for a counterexample to a claim");
  se->add_option("--claim", claim)->required();
  se->add_option("--seed", cfg.seed);
  se->add_option("--budget", cfg.budget);
  se->add_option("--n", cfg.n);
  se->add_option("--workers", cfg.workers)->check(CLI::PositiveNumber);
  se->callback([&] { action = [&] { return cmd_search(claim, cfg, out); }; });

  auto* ve = app.add_subcommand("verify-paper", "run the built-in verification suite");
  ve->add_option("--seed", suite.seed);
  ve->add_option("--budget", suite.budget);
  ve->add_option("--n", suite.n);
  ve->callback([&] { action = [&] { return cmd_verify(suite, out); }; });

  auto* no = app.add_subcommand("normalize", "print a document in canonical form");
  no->add_option("file", file)->required();
  no->callback([&] { action = [&] { return cmd_normalize(file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }
  try {
    return action();
  } catch (const domclo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
