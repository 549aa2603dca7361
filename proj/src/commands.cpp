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

#include "semilin/commands.hpp"

#include "semilin/hausdorff.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace semilin::cli {

std::size_t default_budget() {
  if (const char* env = std::getenv("SEMILIN_DEFAULT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw StructuralError("'" + path + "' is not valid JSON: " + e.what());
  }
}

int exit_code_for(const ValidationReport& report) {
  if (!report.violations.empty()) return kViolated;
  if (report.inconclusive) return kInconclusive;
  return kOk;
}

namespace {

CommandResult from_report(json output, const ValidationReport& report) {
  output["report"] = io::to_json(report);
  return {std::move(output), exit_code_for(report)};
}

/// Finite view of a space and action; implicit inputs are materialized.
std::pair<FiniteMetricSpace, SemigroupAction> finite_pair(const io::SpaceDocument& doc, const json& action,
                                                          std::size_t budget) {
  if (doc.is_finite()) return {doc.finite(), io::parse_action(action, doc.finite())};
  return to_finite(io::parse_implicit_action(action), doc.implicit(), budget);
}

std::vector<PointIndex> parse_subset(const std::string& text, const FiniteMetricSpace& space) {
  std::vector<PointIndex> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    out.push_back(space.index_of(text.substr(start, comma == std::string::npos ? comma : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

CommandResult validate(const json& space, const std::optional<json>& action, const CommandOptions& opts) {
  return guarded([&] {
    const io::SpaceDocument doc = io::parse_space(space, opts.mode);
    ValidationReport report;
    json out;
    if (doc.is_finite()) {
      const FiniteMetricSpace& s = doc.finite();
      report = validate_metric(s);
      if (action) report.merge(check_non_expansive(io::parse_action(*action, s), s));
      out["points"] = s.size();
    } else {
      const ImplicitMetricSpace& s = doc.implicit();
      ImplicitAction a;
      if (action) a = io::parse_implicit_action(*action);
      const Materialized m = action ? materialize_closure(a, s, opts.budget)
                                    : Materialized{s.seeds(), true};
      report = validate_metric(s.materialize(m.points));
      if (action) report.merge(check_non_expansive(a, s, opts.budget));
      if (!m.complete) {
        report.notes.push_back("closure not complete within budget; checked " + std::to_string(m.points.size()) +
                               " points");
      }
      out["points"] = m.points.size();
    }
    return from_report(std::move(out), report);
  });
}

CommandResult orbit(const json& space, const json& action, const std::string& point, const CommandOptions& opts) {
  return guarded([&] {
    const io::SpaceDocument doc = io::parse_space(space, opts.mode);
    CommandResult r;
    bool closed = false;
    if (doc.is_finite()) {
      const FiniteMetricSpace& s = doc.finite();
      const FiniteOrbit o = semilin::orbit(s.index_of(point), io::parse_action(action, s), s, opts.budget);
      r.output = io::to_json(o, s);
      closed = o.closed();
    } else {
      const ImplicitOrbit o =
          semilin::orbit(io::parse_int_point(point), io::parse_implicit_action(action), doc.implicit(), opts.budget);
      r.output = io::to_json(o);
      closed = o.closed();
    }
    r.exit_code = closed ? kOk : kInconclusive;
    return r;
  });
}

CommandResult extend(const json& space, const json& action, const std::optional<std::string>& constant,
                     const CommandOptions& opts) {
  return guarded([&] {
    const io::SpaceDocument doc = io::parse_space(space, opts.mode);
    if (doc.z) throw StructuralError("input is already an extension");
    const auto [s, a] = finite_pair(doc, action, opts.budget);
    const ExtendedSpace ext = constant ? extend_bounded_const(s, a, opts.mode.lift(Scalar::parse(*constant)))
                                       : build_fixed_point_extension(s, a, opts.budget);
    ValidationReport report = validate_extension(ext, a);
    report.merge(check_diam_bound(ext, a, opts.budget));
    return from_report(json{{"extension", io::extension_to_json(ext)}}, report);
  });
}

CommandResult norm(const json& space, const json& combination, const std::optional<std::string>& base,
                   const CommandOptions& opts) {
  return guarded([&] {
    const io::SpaceDocument doc = io::parse_space(space, opts.mode);
    const FiniteMetricSpace& s = doc.finite();
    const PointIndex b = base ? s.index_of(*base) : doc.z.value_or(0);
    const FormalCombination u = io::parse_combination(combination, s, opts.mode);
    const PointedSpace pointed{s, b};
    const NormResult n = ae_norm(u, pointed);
    const ValidationReport report = verify_dual_certificate(u, n, pointed);
    return from_report(json{{"base", s.name(b)}, {"norm", io::to_json(n, s)}}, report);
  });
}

CommandResult hausdorff(const json& space, const json& action, const std::vector<std::string>& sets,
                        const CommandOptions& opts) {
  return guarded([&] {
    const io::SpaceDocument doc = io::parse_space(space, opts.mode);
    const auto [s, a] = finite_pair(doc, action, opts.budget);
    json out;
    if (!sets.empty()) {
      if (sets.size() != 2) throw StructuralError("give exactly two subsets");
      const BoundedSubset x(parse_subset(sets[0], s), s);
      const BoundedSubset y(parse_subset(sets[1], s), s);
      out["hausdorff"] = io::to_json(hausdorff_dist(x, y, s));
    }
    if (is_isometric_group(a, s)) {
      out["group"] = true;
      return from_report(std::move(out), check_group_identification(s, a, opts.budget));
    }
    out["group"] = false;
    out["message"] = "the action is not a group of isometries; identification does not apply";
    out["finding"] = io::to_json(check_orbit_fixed_under_subsets(s, a, opts.budget));
    return CommandResult{std::move(out), kStructural};
  });
}

CommandResult linearize(const json& space, const json& action, const CommandOptions& opts) {
  return guarded([&] {
    const io::SpaceDocument doc = io::parse_space(space, opts.mode);
    if (doc.z) throw StructuralError("input is already an extension");
    LinearizeConfig config;
    config.seed = opts.seed;
    const LinearizationBundle bundle =
        doc.is_finite()
            ? semilin::linearize(doc.finite(), io::parse_action(action, doc.finite()), opts.budget, config)
            : semilin::linearize(doc.implicit(), io::parse_implicit_action(action), opts.budget, config);
    const int code = bundle.refusal ? kInconclusive : bundle.certified() ? kOk : kViolated;
    return CommandResult{io::bundle_to_json(bundle), code};
  });
}

CommandResult certify(const json& bundle, const CommandOptions&) {
  return guarded([&] {
    const LinearizationBundle b = io::bundle_from_json(bundle);
    const ValidationReport report = semilin::certify(b);
    return from_report(json{{"stored_status", bundle.at("status")}}, report);
  });
}

}  // namespace semilin::cli
