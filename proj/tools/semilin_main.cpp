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

// semilin command line tool.

#include "semilin/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr const char* kRuleHelp = R"help(Input formats (JSON):
  space        {"points": ["a","b"], "dist": [["a","b","3/2"]]}
  implicit     {"implicit": {"dimension": 1, "metric": "l1"}, "seeds": [[0]]}
               metric is l1, linf or discrete
  action       {"monoid": false, "generators": [{"name": "s", "map": {"a": "b", "b": "b"}}]}
  combination  {"terms": [{"c": "3/2", "x": "a", "y": "b"}]}

Exact values are strings "p/q", "n" or decimals like "1.25"; integers may be
JSON numbers.

Generators on implicit spaces are rules over integer tuples:
  "n -> n+1"             shift
  "(m,n) -> (n,m)"       swap coordinates
  "n -> max(n-1, 0)"     operators + - * unary -, parentheses,
                         min(a,b,...), max(a,b,...), abs(a), clamp(a,lo,hi)
The number of input variables must equal the space dimension, and so must the
number of outputs. Overflow of 64-bit arithmetic is an input error.

Exit codes: 0 ok/certified, 1 a checked inequality failed, 2 inconclusive
(orbit budget exhausted), 3 input error.)help";

struct Common {
  std::string mode = "exact";
  double tolerance = semilin::kDefaultTolerance;
  std::size_t budget = semilin::cli::default_budget();
  std::uint64_t seed = 0;
  std::string output;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--mode", c.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  sub->add_option("--tolerance", c.tolerance, "comparison tolerance in float mode");
  sub->add_option("--budget", c.budget, "maximum orbit size before giving up")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "seed for sampled certificates");
  sub->add_option("-o,--output", c.output, "write the JSON result here instead of stdout");
}

semilin::cli::CommandOptions options(const Common& c) {
  semilin::cli::CommandOptions o;
  o.mode = semilin::NumericMode{c.mode == "exact", c.tolerance};
  o.budget = c.budget;
  o.seed = c.seed;
  return o;
}

int emit(const semilin::cli::CommandResult& r, const Common& c) {
  const std::string text = r.output.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.output, std::ios::binary);
    if (!out) {
      std::cerr << "semilin: cannot write '" << c.output << "'\n";
      return semilin::cli::kStructural;
    }
    out << text;
  }
  if (r.output.contains("error")) std::cerr << "semilin: " << r.output["message"].get<std::string>() << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = semilin::cli;
  CLI::App app{"Fixed-point extensions and Arens-Eells linearization of non-expansive actions"};
  app.footer(kRuleHelp);
  app.require_subcommand(1);

  Common common;
  std::string space, action, point, combination, bundle, constant, base;
  std::vector<std::string> sets;

  auto* validate = app.add_subcommand("validate", "check metric axioms (and non-expansivity)");
  validate->add_option("space", space, "space file")->required();
  validate->add_option("--action", action, "action file");
  add_common(validate, common);

  auto* orbit = app.add_subcommand("orbit", "enumerate the orbit of a point");
  orbit->add_option("space", space, "space file")->required();
  orbit->add_option("action", action, "action file")->required();
  orbit->add_option("point", point, "point name, or integer tuple such as 0 or (1,2)")->required();
  add_common(orbit, common);

  auto* extend = app.add_subcommand("extend", "adjoin a fixed point z");
  extend->add_option("space", space, "space file")->required();
  extend->add_option("action", action, "action file")->required();
  extend->add_option("--constant", constant, "use d(x,z) = c with c > diam(X)");
  add_common(extend, common);

  auto* norm = app.add_subcommand("norm", "Arens-Eells norm with transport and potential certificates");
  norm->add_option("space", space, "space or extension file")->required();
  norm->add_option("combination", combination, "combination file")->required();
  norm->add_option("--base", base, "base point (default __z, else the first point)");
  add_common(norm, common);

  auto* hausdorff = app.add_subcommand("hausdorff", "identification of z with an orbit in the hyperspace");
  hausdorff->add_option("space", space, "space file")->required();
  hausdorff->add_option("action", action, "action file")->required();
  hausdorff->add_option("--set", sets, "comma separated subset; give two to get their distance");
  add_common(hausdorff, common);

  auto* linearize = app.add_subcommand("linearize", "full pipeline, writes a certificate bundle");
  linearize->add_option("space", space, "space file")->required();
  linearize->add_option("action", action, "action file")->required();
  add_common(linearize, common);

  auto* certify = app.add_subcommand("certify", "re-check a bundle from its own data");
  certify->add_option("bundle", bundle, "bundle file")->required();
  add_common(certify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kStructural;
  }

  const auto opts = options(common);
  const auto load = [](const std::string& path) { return cli::load_json(path); };
  const cli::CommandResult result = cli::guarded([&]() -> cli::CommandResult {
    if (*validate) {
      std::optional<cli::json> a;
      if (!action.empty()) a = load(action);
      return cli::validate(load(space), a, opts);
    }
    if (*orbit) return cli::orbit(load(space), load(action), point, opts);
    if (*extend) {
      return cli::extend(load(space), load(action), constant.empty() ? std::nullopt : std::optional(constant),
                         opts);
    }
    if (*norm) {
      return cli::norm(load(space), load(combination), base.empty() ? std::nullopt : std::optional(base), opts);
    }
    if (*hausdorff) return cli::hausdorff(load(space), load(action), sets, opts);
    if (*linearize) return cli::linearize(load(space), load(action), opts);
    return cli::certify(load(bundle), opts);
  });
  return emit(result, common);
}
