/*
 * Copyright 2026 The semilin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "semilin/io.hpp"

#include "semilin/errors.hpp"

#include <set>

namespace semilin::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw StructuralError(std::string("expected an object with key '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw StructuralError(std::string("missing key '") + key + "'");
  return *it;
}

std::string str(const json& j, const char* what) {
  if (!j.is_string()) throw StructuralError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

PointIndex point(const json& j, const FiniteMetricSpace& space) {
  return space.index_of(str(j, "point name"));
}

std::size_t count(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw StructuralError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

NumericMode mode_of(const FiniteMetricSpace& space) {
  for (PointIndex i = 0; i < space.size(); ++i) {
    for (PointIndex j = 0; j < space.size(); ++j) {
      if (!space.dist(i, j).is_exact()) return {false, space.dist(i, j).tolerance()};
    }
  }
  return {};
}

}  // namespace

Scalar scalar_from_json(const json& j, const NumericMode& mode) {
  if (j.is_number_integer()) {
    return mode.lift(Scalar(j.get<long long>()));
  }
  if (j.is_number_float()) {
    if (mode.exact) throw StructuralError("fractional JSON number in exact mode; write it as a \"p/q\" string");
    return Scalar::approx(j.get<double>(), mode.tolerance);
  }
  if (j.is_string()) return mode.lift(Scalar::parse(j.get<std::string>()));
  throw StructuralError("expected a number or a \"p/q\" string, got " + j.dump());
}

json to_json(const Scalar& s) {
  if (s.is_exact()) return s.to_string();
  return s.to_double();
}

const FiniteMetricSpace& SpaceDocument::finite() const {
  if (const auto* f = std::get_if<FiniteMetricSpace>(&space)) return *f;
  throw StructuralError("this operation needs a finite space");
}

const ImplicitMetricSpace& SpaceDocument::implicit() const {
  if (const auto* s = std::get_if<ImplicitMetricSpace>(&space)) return *s;
  throw StructuralError("this operation needs an implicit space");
}

IntPoint parse_int_point(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  IntPoint out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    const Scalar v = Scalar::parse(piece);
    const auto& r = v.rational();
    if (boost::multiprecision::denominator(r) != 1) throw StructuralError("non-integer coordinate");
    out.push_back(boost::multiprecision::numerator(r).convert_to<long long>());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

IntPoint int_point_from_json(const json& j) {
  if (j.is_number_integer()) return {j.get<long long>()};
  if (j.is_string()) return parse_int_point(j.get<std::string>());
  if (j.is_array()) {
    IntPoint p;
    for (const auto& c : j) {
      if (!c.is_number_integer()) throw StructuralError("seed coordinates must be integers");
      p.push_back(c.get<long long>());
    }
    return p;
  }
  throw StructuralError("malformed seed " + j.dump());
}

ImplicitMetricSpace implicit_from_json(const json& j, const NumericMode& mode) {
  const json& spec = field(j, "implicit");
  const std::size_t dim = count(field(spec, "dimension"), "dimension");
  const std::string metric = spec.contains("metric") ? str(spec["metric"], "metric") : "l1";
  LatticeMetric m;
  if (metric == "l1") {
    m = LatticeMetric::L1;
  } else if (metric == "linf") {
    m = LatticeMetric::LInf;
  } else if (metric == "discrete") {
    m = LatticeMetric::Discrete;
  } else {
    throw StructuralError("unknown lattice metric '" + metric + "' (use l1, linf or discrete)");
  }
  std::vector<IntPoint> seeds;
  const json& sj = field(j, "seeds");
  if (!sj.is_array()) throw StructuralError("seeds must be an array");
  for (const auto& s : sj) seeds.push_back(int_point_from_json(s));
  return ImplicitMetricSpace::lattice(dim, std::move(seeds), m, mode);
}

}  // namespace

SpaceDocument parse_space(const json& j, const NumericMode& mode) {
  if (j.is_object() && j.contains("implicit")) return {implicit_from_json(j, mode), std::nullopt};

  const json& pj = field(j, "points");
  if (!pj.is_array()) throw StructuralError("points must be an array");
  const bool extension = j.contains("z");
  if (extension && str(j["z"], "z") != kFixedPointName) {
    throw StructuralError("extension point must be named '" + std::string(kFixedPointName) + "'");
  }
  std::vector<std::string> names;
  for (const auto& p : pj) {
    names.push_back(str(p, "point name"));
    if (names.back() == kFixedPointName && !extension) {
      throw StructuralError("point name '" + std::string(kFixedPointName) + "' is reserved");
    }
  }
  const json& dj = field(j, "dist");
  if (!dj.is_array()) throw StructuralError("dist must be an array");
  std::vector<FiniteMetricSpace::Entry> entries;
  for (const auto& e : dj) {
    if (!e.is_array() || e.size() != 3) throw StructuralError("dist entries are [a, b, d] triples");
    entries.emplace_back(str(e[0], "point name"), str(e[1], "point name"), scalar_from_json(e[2], mode));
  }
  SpaceDocument doc{FiniteMetricSpace::from_entries(std::move(names), entries), std::nullopt};
  if (extension) {
    const auto z = std::get<FiniteMetricSpace>(doc.space).find(kFixedPointName);
    if (!z) throw StructuralError("extension file does not list '" + std::string(kFixedPointName) + "'");
    doc.z = *z;
  }
  return doc;
}

json space_to_json(const FiniteMetricSpace& space) {
  json points = json::array();
  json dist = json::array();
  for (PointIndex i = 0; i < space.size(); ++i) points.push_back(space.name(i));
  for (PointIndex i = 0; i < space.size(); ++i) {
    for (PointIndex k = i + 1; k < space.size(); ++k) {
      dist.push_back(json::array({space.name(i), space.name(k), to_json(space.dist(i, k))}));
      if (space.dist(i, k) != space.dist(k, i)) {
        dist.push_back(json::array({space.name(k), space.name(i), to_json(space.dist(k, i))}));
      }
    }
  }
  return json{{"points", points}, {"dist", dist}};
}

SemigroupAction parse_action(const json& j, const FiniteMetricSpace& space) {
  const bool monoid = j.contains("monoid") ? field(j, "monoid").get<bool>() : false;
  const json& gj = field(j, "generators");
  if (!gj.is_array()) throw StructuralError("generators must be an array");
  const auto z = space.find(kFixedPointName);
  std::vector<GeneratorMap> gens;
  for (const auto& g : gj) {
    GeneratorMap map{str(field(g, "name"), "generator name"), std::vector<PointIndex>(space.size())};
    const json& mj = field(g, "map");
    if (!mj.is_object()) {
      throw StructuralError("generator '" + map.name + "' needs a point table on a finite space");
    }
    std::vector<bool> set(space.size(), false);
    for (const auto& [from, to] : mj.items()) {
      const PointIndex f = space.index_of(from);
      map.image[f] = point(to, space);
      set[f] = true;
    }
    for (PointIndex p = 0; p < space.size(); ++p) {
      if (set[p]) continue;
      if (z && p == *z) {
        map.image[p] = p;
      } else {
        throw StructuralError("generator '" + map.name + "' is not defined on '" + space.name(p) + "'");
      }
    }
    gens.push_back(std::move(map));
  }
  return SemigroupAction(std::move(gens), monoid);
}

ImplicitAction parse_implicit_action(const json& j) {
  ImplicitAction action;
  action.has_identity = j.contains("monoid") ? field(j, "monoid").get<bool>() : false;
  const json& gj = field(j, "generators");
  if (!gj.is_array()) throw StructuralError("generators must be an array");
  for (const auto& g : gj) {
    const std::string name = str(field(g, "name"), "generator name");
    const json& rule = field(g, "map");
    if (!rule.is_string()) throw StructuralError("generator '" + name + "' needs a rule string on an implicit space");
    action.generators.push_back({name, IntRule::parse(rule.get<std::string>())});
  }
  if (action.generators.empty()) throw StructuralError("action needs at least one generator");
  return action;
}

json action_to_json(const SemigroupAction& action, const FiniteMetricSpace& space) {
  json gens = json::array();
  for (const auto& g : action.generators()) {
    json map = json::object();
    for (PointIndex p = 0; p < g.image.size(); ++p) map[space.name(p)] = space.name(g.image[p]);
    gens.push_back(json{{"name", g.name}, {"map", map}});
  }
  return json{{"monoid", action.has_identity()}, {"generators", gens}};
}

FormalCombination parse_combination(const json& j, const FiniteMetricSpace& space, const NumericMode& mode) {
  const json& tj = field(j, "terms");
  if (!tj.is_array()) throw StructuralError("terms must be an array");
  FormalCombination u;
  for (const auto& t : tj) {
    u.terms.push_back({scalar_from_json(field(t, "c"), mode), point(field(t, "x"), space),
                       point(field(t, "y"), space)});
  }
  return u;
}

json combination_to_json(const FormalCombination& u, const FiniteMetricSpace& space) {
  json terms = json::array();
  for (const auto& t : u.terms) {
    terms.push_back(json{{"c", to_json(t.c)}, {"x", space.name(t.x)}, {"y", space.name(t.y)}});
  }
  return json{{"terms", terms}};
}

json to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    json values = json::array();
    for (const auto& s : v.values) values.push_back(to_json(s));
    violations.push_back(
        json{{"axiom", v.axiom}, {"witnesses", v.witnesses}, {"values", values}, {"detail", v.detail}});
  }
  json out{{"ok", report.ok()}, {"violations", violations}, {"notes", report.notes}};
  if (report.inconclusive) out["inconclusive"] = *report.inconclusive;
  return out;
}

json to_json(const FiniteOrbit& orbit, const FiniteMetricSpace& space) {
  json points = json::array();
  for (auto p : orbit.points) points.push_back(space.name(p));
  return json{{"base", space.name(orbit.base)},
              {"points", points},
              {"status", orbit.closed() ? "Closed" : "BudgetExhausted"},
              {"diameter_so_far", to_json(orbit.diameter_so_far)},
              {"budget_used", orbit.budget_used}};
}

json to_json(const ImplicitOrbit& orbit) {
  json points = json::array();
  for (const auto& p : orbit.points) points.push_back(point_name(p));
  return json{{"base", point_name(orbit.base)},
              {"points", points},
              {"status", orbit.closed() ? "Closed" : "BudgetExhausted"},
              {"diameter_so_far", to_json(orbit.diameter_so_far)},
              {"budget_used", orbit.budget_used}};
}

json mass_to_json(const SignedMass& mass, const FiniteMetricSpace& space) {
  json out = json::object();
  for (const auto& [p, m] : mass.entries()) out[space.name(p)] = to_json(m);
  return out;
}

SignedMass mass_from_json(const json& j, const FiniteMetricSpace& space, const NumericMode& mode) {
  if (!j.is_object()) throw StructuralError("mass must be an object");
  SignedMass out;
  for (const auto& [name, v] : j.items()) out.add(space.index_of(name), scalar_from_json(v, mode));
  return out;
}

json to_json(const NormResult& norm, const FiniteMetricSpace& space) {
  json plan = json::array();
  for (const auto& f : norm.plan.flows) {
    plan.push_back(json{{"from", space.name(f.from)}, {"to", space.name(f.to)}, {"amount", to_json(f.amount)}});
  }
  json potential = json::object();
  for (const auto& [p, v] : norm.potential.values) potential[space.name(p)] = to_json(v);
  return json{{"value", to_json(norm.value)}, {"plan", plan}, {"potential", potential}};
}

NormResult norm_from_json(const json& j, const FiniteMetricSpace& space, const NumericMode& mode) {
  NormResult out;
  out.value = scalar_from_json(field(j, "value"), mode);
  for (const auto& f : field(j, "plan")) {
    out.plan.flows.push_back({point(field(f, "from"), space), point(field(f, "to"), space),
                              scalar_from_json(field(f, "amount"), mode)});
  }
  const json& pj = field(j, "potential");
  if (!pj.is_object()) throw StructuralError("potential must be an object");
  for (const auto& [name, v] : pj.items()) out.potential.values[space.index_of(name)] = scalar_from_json(v, mode);
  return out;
}

json extension_to_json(const ExtendedSpace& ext) {
  json out = space_to_json(ext.as_space());
  out["z"] = std::string(kFixedPointName);
  if (const auto* c = std::get_if<ConstantExtension>(&ext.provenance)) {
    out["provenance"] = json{{"kind", "constant"}, {"c", to_json(c->c)}};
  } else {
    const auto& sup = std::get<SupdistExtension>(ext.provenance);
    json orbits = json::array();
    for (PointIndex x = 0; x < sup.orbits.size(); ++x) {
      json members = json::array();
      for (auto p : sup.orbits[x]) members.push_back(ext.base.name(p));
      orbits.push_back(json{{"point", ext.base.name(x)}, {"orbit", members}});
    }
    out["provenance"] = json{{"kind", "supdist"}, {"x0", ext.base.name(sup.x0)}, {"orbits", orbits}};
  }
  return out;
}

ExtendedSpace extension_from_json(const json& j, const NumericMode& mode) {
  const SpaceDocument doc = parse_space(j, mode);
  if (!doc.z) throw StructuralError("not an extension document (missing \"z\")");
  const FiniteMetricSpace& full = doc.finite();
  const PointIndex z = *doc.z;
  std::vector<PointIndex> base_points;
  for (PointIndex p = 0; p < full.size(); ++p) {
    if (p != z) base_points.push_back(p);
  }
  ExtendedSpace ext{full.restrict_to(base_points), {}, ConstantExtension{}};
  for (auto p : base_points) ext.dist_to_z.push_back(full.dist(p, z));

  const json& prov = field(j, "provenance");
  const std::string kind = str(field(prov, "kind"), "provenance kind");
  if (kind == "constant") {
    ext.provenance = ConstantExtension{scalar_from_json(field(prov, "c"), mode)};
  } else if (kind == "supdist") {
    SupdistExtension sup{ext.base.index_of(str(field(prov, "x0"), "x0")),
                         std::vector<std::vector<PointIndex>>(ext.base.size())};
    for (const auto& entry : field(prov, "orbits")) {
      const PointIndex x = ext.base.index_of(str(field(entry, "point"), "point"));
      for (const auto& m : field(entry, "orbit")) sup.orbits[x].push_back(ext.base.index_of(str(m, "point")));
    }
    ext.provenance = std::move(sup);
  } else {
    throw StructuralError("unknown provenance kind '" + kind + "'");
  }
  return ext;
}

json bundle_to_json(const LinearizationBundle& bundle) {
  json out;
  out["format_version"] = LinearizationBundle::kFormatVersion;
  out["budget"] = bundle.budget;
  out["config"] = json{{"contraction_samples", bundle.config.contraction_samples},
                       {"max_word_length", bundle.config.max_word_length},
                       {"seed", bundle.config.seed}};
  out["completion"] =
      "The certified space is the normed Arens-Eells space over X ∪ {z}; it is dense in its "
      "Banach completion, to which the linear action extends uniquely. Completion adds no "
      "finitely checkable identities, so none are recorded here.";
  if (bundle.refusal) {
    const auto& r = *bundle.refusal;
    out["status"] = "refused";
    out["refusal"] = json{{"point", r.point},
                          {"budget", r.budget},
                          {"reached", r.reached},
                          {"diameter_so_far", to_json(r.diameter_so_far)},
                          {"reason", "orbit not closed within budget; boundedness not certified"}};
    return out;
  }
  out["status"] = bundle.certified() ? "certified" : "failed";
  if (!bundle.extended || !bundle.action) return out;

  const ExtendedSpace& ext = *bundle.extended;
  const FiniteMetricSpace full = ext.as_space();
  const NumericMode mode = mode_of(full);
  out["mode"] = mode.exact ? json{{"kind", "exact"}} : json{{"kind", "float"}, {"tolerance", mode.tolerance}};
  out["extension"] = extension_to_json(ext);
  out["action"] = action_to_json(*bundle.action, full);

  json embedding = json::array();
  for (const auto& e : bundle.embedding) {
    embedding.push_back(json{{"point", full.name(e.point)},
                             {"mass", mass_to_json(e.mass, full)},
                             {"norm", to_json(e.norm, full)}});
  }
  out["embedding"] = embedding;

  json linear = json::array();
  for (std::size_t g = 0; g < bundle.linear_action.size(); ++g) {
    json columns = json::array();
    for (PointIndex x = 0; x < bundle.linear_action[g].size(); ++x) {
      columns.push_back(json{{"point", full.name(x)}, {"image", mass_to_json(bundle.linear_action[g][x], full)}});
    }
    linear.push_back(json{{"generator", bundle.action->generator(g).name}, {"columns", columns}});
  }
  out["linear_action"] = linear;

  json certs = json::array();
  for (const auto& c : bundle.certificates) {
    certs.push_back(json{{"claim", c.claim}, {"ok", c.ok}, {"witness", c.witness}});
  }
  out["certificates"] = certs;
  return out;
}

LinearizationBundle bundle_from_json(const json& j) {
  if (count(field(j, "format_version"), "format_version") != LinearizationBundle::kFormatVersion) {
    throw StructuralError("unsupported bundle format version");
  }
  LinearizationBundle b;
  b.budget = count(field(j, "budget"), "budget");
  const json& cj = field(j, "config");
  b.config.contraction_samples = count(field(cj, "contraction_samples"), "contraction_samples");
  b.config.max_word_length = count(field(cj, "max_word_length"), "max_word_length");
  b.config.seed = field(cj, "seed").get<std::uint64_t>();

  const std::string status = str(field(j, "status"), "status");
  if (status == "refused") {
    const json& r = field(j, "refusal");
    b.refusal = Refusal{str(field(r, "point"), "point"), count(field(r, "budget"), "budget"),
                        count(field(r, "reached"), "reached"),
                        scalar_from_json(field(r, "diameter_so_far"), NumericMode{})};
    return b;
  }
  if (!j.contains("extension")) return b;

  NumericMode mode;
  const json& mj = field(j, "mode");
  if (str(field(mj, "kind"), "mode kind") == "float") {
    mode = NumericMode{false, field(mj, "tolerance").get<double>()};
  }
  b.extended = extension_from_json(field(j, "extension"), mode);
  const FiniteMetricSpace full = b.extended->as_space();
  b.action = parse_action(field(j, "action"), full);

  for (const auto& e : field(j, "embedding")) {
    b.embedding.push_back({full.index_of(str(field(e, "point"), "point")), mass_from_json(field(e, "mass"), full, mode),
                           norm_from_json(field(e, "norm"), full, mode)});
  }
  for (const auto& g : field(j, "linear_action")) {
    std::vector<SignedMass> columns;
    for (const auto& c : field(g, "columns")) columns.push_back(mass_from_json(field(c, "image"), full, mode));
    b.linear_action.push_back(std::move(columns));
  }
  for (const auto& c : field(j, "certificates")) {
    b.certificates.push_back({str(field(c, "claim"), "claim"), field(c, "ok").get<bool>(),
                              str(field(c, "witness"), "witness")});
  }
  return b;
}

}  // namespace semilin::io
