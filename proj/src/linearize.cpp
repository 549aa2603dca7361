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

#include "semilin/linearize.hpp"

#include "semilin/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace semilin {

bool LinearizationBundle::certified() const {
  if (refusal || certificates.empty()) return false;
  return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.ok; });
}

namespace {

std::string describe(const Violation& v) {
  std::string out = v.axiom;
  if (!v.witnesses.empty()) {
    out += " at (";
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) out += (i ? ", " : "") + v.witnesses[i];
    out += ")";
  }
  if (!v.detail.empty()) out += ": " + v.detail;
  if (!v.values.empty()) {
    out += " [";
    for (std::size_t i = 0; i < v.values.size(); ++i) out += (i ? ", " : "") + v.values[i].to_string();
    out += "]";
  }
  return out;
}

/// Certificate from the violations of `report` whose axiom is in `axioms`.
Certificate from_report(std::string claim, const ValidationReport& report,
                        std::initializer_list<std::string_view> axioms, std::string ok_witness) {
  std::vector<const Violation*> hits;
  for (const auto& v : report.violations) {
    if (std::find(axioms.begin(), axioms.end(), v.axiom) != axioms.end()) hits.push_back(&v);
  }
  if (hits.empty()) return {std::move(claim), true, std::move(ok_witness)};
  std::string witness = describe(*hits.front());
  if (hits.size() > 1) witness += " (+" + std::to_string(hits.size() - 1) + " more)";
  return {std::move(claim), false, std::move(witness)};
}

/// Uniform integer in [lo, hi] from the raw engine output. Avoids
/// std::uniform_int_distribution, whose output differs between standard
/// libraries.
long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(rng() % span);
}

struct Context {
  const LinearizationBundle& bundle;
  const ExtendedSpace& ext;
  const SemigroupAction& action;
  FiniteMetricSpace full;
  PointIndex z;

  [[nodiscard]] PointedSpace pointed() const { return {full, z}; }
};

Certificate check_provenance(const Context& ctx) {
  const auto& ext = ctx.ext;
  if (const auto* c = std::get_if<ConstantExtension>(&ext.provenance)) {
    const Scalar d = diam(ext.base);
    if (!(c->c > d)) return {"provenance", false, "constant " + c->c.to_string() + " <= diam " + d.to_string()};
    for (PointIndex x = 0; x < ext.base.size(); ++x) {
      if (ext.dist_to_z[x] != c->c) {
        return {"provenance", false, "d(" + ext.base.name(x) + ",z) != " + c->c.to_string()};
      }
    }
    return {"provenance", true, "constant extension c=" + c->c.to_string() + " > diam " + d.to_string()};
  }
  const auto& sup = std::get<SupdistExtension>(ext.provenance);
  if (sup.x0 >= ext.base.size() || sup.orbits.size() != ext.base.size()) {
    return {"provenance", false, "malformed supdist provenance"};
  }
  for (PointIndex x = 0; x < ext.base.size(); ++x) {
    const auto o = orbit(x, adjoin_identity(ctx.action), ctx.full, ctx.bundle.budget);
    std::set<PointIndex> fresh(o.points.begin(), o.points.end());
    std::set<PointIndex> recorded(sup.orbits[x].begin(), sup.orbits[x].end());
    if (!o.closed() || fresh != recorded) {
      return {"provenance", false, "recorded orbit of " + ext.base.name(x) + " differs from S_e·x"};
    }
    if (sup.orbits[x].empty() || ext.dist_to_z[x] != supdist(sup.x0, sup.orbits[x], ext.base)) {
      return {"provenance", false, "d(" + ext.base.name(x) + ",z) != supdist(x0, S_e·x)"};
    }
  }
  return {"provenance", true, "d(x,z) = supdist(" + ext.base.name(sup.x0) + ", S_e·x) for all x"};
}

Certificate check_bounded_orbits(const Context& ctx) {
  const auto monoid = adjoin_identity(ctx.action);
  std::size_t largest = 0;
  for (PointIndex x = 0; x < ctx.ext.base.size(); ++x) {
    const auto o = orbit(x, monoid, ctx.full, ctx.bundle.budget);
    if (!o.closed()) return {"bounded-orbits", false, "orbit of " + ctx.ext.base.name(x) + " not closed"};
    largest = std::max(largest, o.points.size());
  }
  return {"bounded-orbits", true,
          "all orbits closed; largest has " + std::to_string(largest) + " points"};
}

Certificate check_embedding(const Context& ctx) {
  const auto& b = ctx.bundle;
  const std::size_t n = ctx.ext.base.size();
  if (b.embedding.size() != n) {
    return {"embedding-isometry", false, "embedding has " + std::to_string(b.embedding.size()) + " entries"};
  }
  for (PointIndex x = 0; x < n; ++x) {
    const auto& e = b.embedding[x];
    const std::string& name = ctx.ext.base.name(x);
    if (e.point != x) return {"embedding-isometry", false, "entry " + std::to_string(x) + " is out of order"};
    const auto u = embed(x, ctx.pointed());
    if (!(e.mass == reduce(u))) return {"embedding-isometry", false, "mass of " + name + " != x - z"};
    const Scalar& d = ctx.full.dist(x, ctx.z);
    if (e.norm.value != d) {
      return {"embedding-isometry", false,
              "||" + name + " - z|| = " + e.norm.value.to_string() + " != d(x,z) = " + d.to_string()};
    }
    const auto cert = verify_dual_certificate(u, e.norm, ctx.pointed());
    if (!cert.ok()) return {"embedding-isometry", false, name + ": " + describe(cert.violations.front())};
    const Scalar fresh = ae_norm(u, ctx.pointed()).value;
    if (fresh != d) return {"embedding-isometry", false, "recomputed norm of " + name + " != d(x,z)"};
  }
  return {"embedding-isometry", true, "||x - z|| = d(x,z) with certificates for all " + std::to_string(n) + " points"};
}

Certificate check_equivariance(const Context& ctx) {
  const auto& b = ctx.bundle;
  const auto& act = ctx.action;
  const std::size_t n = ctx.ext.base.size();
  if (b.linear_action.size() != act.generator_count()) {
    return {"equivariance", false, "linear action has the wrong number of generators"};
  }
  for (std::size_t g = 0; g < act.generator_count(); ++g) {
    if (b.linear_action[g].size() != n) return {"equivariance", false, "linear action column count"};
    for (PointIndex x = 0; x < n; ++x) {
      const SignedMass image = reduce(apply_action({g}, embed(x, ctx.pointed()), act));
      const SignedMass target = reduce(embed(act.apply(g, x), ctx.pointed()));
      if (!(b.linear_action[g][x] == image) || !(image == target)) {
        return {"equivariance", false,
                act.generator(g).name + "·(" + ctx.ext.base.name(x) + " - z) != " +
                    ctx.full.name(act.apply(g, x)) + " - z"};
      }
    }
  }
  std::size_t words = 0;
  for (const auto& w : enumerate_words(act, b.config.max_word_length)) {
    ++words;
    for (PointIndex x = 0; x < n; ++x) {
      const SignedMass image = reduce(apply_action(w, embed(x, ctx.pointed()), act));
      if (!(image == reduce(embed(act.apply(w, x), ctx.pointed())))) {
        return {"equivariance", false, "word of length " + std::to_string(w.size()) + " at " + ctx.ext.base.name(x)};
      }
    }
  }
  return {"equivariance", true,
          "w·(x - z) = w·x - z for " + std::to_string(words) + " words up to length " +
              std::to_string(b.config.max_word_length)};
}

Certificate check_contraction(const Context& ctx) {
  const auto& b = ctx.bundle;
  const auto& act = ctx.action;
  const std::size_t n = ctx.ext.base.size();
  for (std::size_t g = 0; g < act.generator_count(); ++g) {
    for (PointIndex x = 0; x < n; ++x) {
      const Scalar before = ctx.full.dist(x, ctx.z);
      const Scalar after = ae_norm(apply_action({g}, embed(x, ctx.pointed()), act), ctx.pointed()).value;
      if (after > before) {
        return {"contraction", false,
                "||" + act.generator(g).name + "·(" + ctx.ext.base.name(x) + " - z)|| = " + after.to_string() +
                    " > " + before.to_string()};
      }
    }
  }
  std::mt19937_64 rng(b.config.seed);
  const auto points = static_cast<long long>(ctx.full.size());
  const auto gens = static_cast<long long>(act.generator_count());
  for (std::size_t s = 0; s < b.config.contraction_samples; ++s) {
    Word w(static_cast<std::size_t>(draw(rng, 1, static_cast<long long>(std::max<std::size_t>(1, b.config.max_word_length)))));
    for (auto& letter : w) letter = static_cast<std::size_t>(draw(rng, 0, gens - 1));
    FormalCombination u;
    const long long terms = draw(rng, 1, 4);
    for (long long t = 0; t < terms; ++t) {
      long long num = draw(rng, -6, 5);
      if (num >= 0) ++num;
      const Scalar c = Scalar(Rational(num, draw(rng, 1, 4)));
      u.terms.push_back({c, static_cast<PointIndex>(draw(rng, 0, points - 1)),
                         static_cast<PointIndex>(draw(rng, 0, points - 1))});
    }
    const Scalar before = ae_norm(u, ctx.pointed()).value;
    const Scalar after = ae_norm(apply_action(w, u, act), ctx.pointed()).value;
    if (after > before) {
      return {"contraction", false,
              "sample " + std::to_string(s) + ": " + after.to_string() + " > " + before.to_string()};
    }
  }
  return {"contraction", true,
          "basis columns and " + std::to_string(b.config.contraction_samples) + " random samples (seed " +
              std::to_string(b.config.seed) + ")"};
}

LinearizationBundle refuse(std::size_t budget, const LinearizeConfig& config, std::string point,
                           std::size_t reached, Scalar diameter) {
  LinearizationBundle b;
  b.budget = budget;
  b.config = config;
  b.refusal = Refusal{std::move(point), budget, reached, std::move(diameter)};
  return b;
}

}  // namespace

std::vector<Certificate> compute_certificates(const LinearizationBundle& bundle) {
  if (bundle.refusal || !bundle.extended || !bundle.action) return {};
  const ExtendedSpace& ext = *bundle.extended;
  if (bundle.action->domain_size() != ext.base.size() + 1) {
    return {{"action-domain", false, "action does not act on X ∪ {z}"}};
  }
  Context ctx{bundle, ext, *bundle.action, ext.as_space(), ext.z()};

  std::vector<Certificate> out;
  // Tampered bundles can carry out-of-range data; that fails the claim
  // being checked rather than the whole run.
  auto guarded = [&](std::string claim, auto check) {
    try {
      out.push_back(check());
    } catch (const std::exception& e) {
      out.push_back({std::move(claim), false, e.what()});
    }
  };
  const ValidationReport ext_report = validate_extension(ext, ctx.action);
  out.push_back(from_report("metric", ext_report,
                            {"zero-diagonal", "positivity", "symmetry", "triangle", "triangle-a", "triangle-b"},
                            "metric axioms hold on X ∪ {z}"));
  guarded("bounded-orbits", [&] { return check_bounded_orbits(ctx); });
  guarded("provenance", [&] { return check_provenance(ctx); });
  out.push_back(from_report("fixed-point", ext_report, {"z-fixed"}, "z is fixed by every generator"));
  out.push_back(from_report("non-expansive", ext_report, {"non-expansive", "non-expansive-at-z"},
                            "every generator is non-expansive on X ∪ {z}"));
  out.push_back(from_report("inclusion", ext_report, {"inclusion-isometry", "inclusion-equivariant"},
                            "X -> X ∪ {z} is isometric and equivariant"));
  const auto diam_report = check_diam_bound(ext, ctx.action, bundle.budget);
  if (diam_report.inconclusive) {
    out.push_back({"diam-bound", false, *diam_report.inconclusive});
  } else {
    out.push_back(from_report("diam-bound", diam_report, {"diam-bound"}, "diam(S·x) <= 2 d(x,z) for all x"));
  }
  guarded("embedding-isometry", [&] { return check_embedding(ctx); });
  guarded("equivariance", [&] { return check_equivariance(ctx); });
  guarded("contraction", [&] { return check_contraction(ctx); });
  return out;
}

LinearizationBundle linearize(const FiniteMetricSpace& space, const SemigroupAction& action,
                              std::size_t budget, const LinearizeConfig& config) {
  if (const auto metric = validate_metric(space); !metric.ok()) {
    throw StructuralError("input is not a metric space: " + describe(metric.violations.front()));
  }
  if (action.domain_size() != space.size()) throw StructuralError("action and space sizes differ");

  const SemigroupAction monoid = adjoin_identity(action);
  for (PointIndex x = 0; x < space.size(); ++x) {
    const auto o = orbit(x, monoid, space, budget);
    if (!o.closed()) return refuse(budget, config, space.name(x), o.budget_used, o.diameter_so_far);
  }

  LinearizationBundle b;
  b.budget = budget;
  b.config = config;
  b.extended = build_fixed_point_extension(space, action, budget);
  b.action = extend_action(action);
  const FiniteMetricSpace full = b.extended->as_space();
  const PointedSpace pointed{full, b.extended->z()};
  for (PointIndex x = 0; x < space.size(); ++x) {
    const auto u = embed(x, pointed);
    b.embedding.push_back({x, reduce(u), ae_norm(u, pointed)});
  }
  for (std::size_t g = 0; g < b.action->generator_count(); ++g) {
    std::vector<SignedMass> columns;
    for (PointIndex x = 0; x < space.size(); ++x) {
      columns.push_back(reduce(apply_action({g}, embed(x, pointed), *b.action)));
    }
    b.linear_action.push_back(std::move(columns));
  }
  b.certificates = compute_certificates(b);
  return b;
}

LinearizationBundle linearize(const ImplicitMetricSpace& space, const ImplicitAction& action,
                              std::size_t budget, const LinearizeConfig& config) {
  for (const auto& s : space.seeds()) {
    const auto o = orbit(s, action, space, budget);
    if (!o.closed()) return refuse(budget, config, point_name(s), o.budget_used, o.diameter_so_far);
  }
  const auto [finite_space, finite_action] = to_finite(action, space, budget);
  return linearize(finite_space, finite_action, budget, config);
}

ValidationReport certify(const LinearizationBundle& bundle) {
  ValidationReport report;
  if (bundle.refusal) {
    report.inconclusive = "refused: orbit of '" + bundle.refusal->point + "' not closed within budget " +
                          std::to_string(bundle.refusal->budget);
    return report;
  }
  const auto fresh = compute_certificates(bundle);
  if (fresh.empty()) {
    report.add({"bundle", {}, {}, "bundle has neither a refusal nor an extension"});
    return report;
  }
  for (const auto& c : fresh) {
    if (!c.ok) report.add({c.claim, {}, {}, c.witness});
  }
  for (const auto& c : fresh) {
    const auto stored = std::find_if(bundle.certificates.begin(), bundle.certificates.end(),
                                     [&](const Certificate& s) { return s.claim == c.claim; });
    if (stored == bundle.certificates.end() || stored->ok != c.ok) {
      report.notes.push_back("stored certificate '" + c.claim + "' disagrees with recomputation");
    }
  }
  return report;
}

}  // namespace semilin
