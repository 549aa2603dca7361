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


// Thin binding over the command layer. Documents cross the boundary as JSON
// text; the Python package turns them into dicts.

#include "semilin/commands.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;
using semilin::cli::CommandOptions;
using semilin::cli::CommandResult;
using semilin::cli::json;

namespace {

CommandOptions options(const std::string& mode, double tolerance, std::size_t budget, std::uint64_t seed) {
  CommandOptions opts;
  if (mode == "float") {
    opts.mode.exact = false;
    opts.mode.tolerance = tolerance;
  } else if (mode != "exact") {
    throw py::value_error("mode must be 'exact' or 'float'");
  }
  opts.budget = budget;
  opts.seed = seed;
  return opts;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw py::value_error(std::string("invalid JSON: ") + e.what());
  }
}

std::optional<json> parse(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return parse(*text);
}

std::tuple<std::string, int> out(const CommandResult& r) { return {r.output.dump(), r.exit_code}; }

template <class F>
std::tuple<std::string, int> run(F&& f) {
  CommandResult r;
  {
    py::gil_scoped_release release;
    r = semilin::cli::guarded(std::forward<F>(f));
  }
  return out(r);
}

}  // namespace

PYBIND11_MODULE(_semilin, m) {
  m.doc() = "Linearization of non-expansive semigroup actions on finite metric spaces.";
  m.attr("DEFAULT_BUDGET") = semilin::cli::kDefaultBudget;

#define SEMILIN_OPTS                                                                              \
  const std::string &mode, double tolerance, std::size_t budget, std::uint64_t seed
#define SEMILIN_OPT_ARGS                                                                          \
  py::kw_only(), py::arg("mode") = "exact", py::arg("tolerance") = 1e-9,                          \
      py::arg("budget") = semilin::cli::kDefaultBudget, py::arg("seed") = 0

  m.def(
      "validate",
      [](const std::string& space, const std::optional<std::string>& action, SEMILIN_OPTS) {
        auto opts = options(mode, tolerance, budget, seed);
        auto s = parse(space);
        auto a = parse(action);
        return run([&] { return semilin::cli::validate(s, a, opts); });
      },
      py::arg("space"), py::arg("action") = py::none(), SEMILIN_OPT_ARGS);
  m.def(
      "orbit",
      [](const std::string& space, const std::string& action, const std::string& point, SEMILIN_OPTS) {
        auto opts = options(mode, tolerance, budget, seed);
        auto s = parse(space);
        auto a = parse(action);
        return run([&] { return semilin::cli::orbit(s, a, point, opts); });
      },
      py::arg("space"), py::arg("action"), py::arg("point"), SEMILIN_OPT_ARGS);
  m.def(
      "extend",
      [](const std::string& space, const std::string& action, const std::optional<std::string>& constant,
         SEMILIN_OPTS) {
        auto opts = options(mode, tolerance, budget, seed);
        auto s = parse(space);
        auto a = parse(action);
        return run([&] { return semilin::cli::extend(s, a, constant, opts); });
      },
      py::arg("space"), py::arg("action"), py::arg("constant") = py::none(), SEMILIN_OPT_ARGS);
  m.def(
      "norm",
      [](const std::string& space, const std::string& combination, const std::optional<std::string>& base,
         SEMILIN_OPTS) {
        auto opts = options(mode, tolerance, budget, seed);
        auto s = parse(space);
        auto c = parse(combination);
        return run([&] { return semilin::cli::norm(s, c, base, opts); });
      },
      py::arg("space"), py::arg("combination"), py::arg("base") = py::none(), SEMILIN_OPT_ARGS);
  m.def(
      "hausdorff",
      [](const std::string& space, const std::string& action, const std::vector<std::string>& sets, SEMILIN_OPTS) {
        auto opts = options(mode, tolerance, budget, seed);
        auto s = parse(space);
        auto a = parse(action);
        return run([&] { return semilin::cli::hausdorff(s, a, sets, opts); });
      },
      py::arg("space"), py::arg("action"), py::arg("sets") = std::vector<std::string>{}, SEMILIN_OPT_ARGS);
  m.def(
      "linearize",
      [](const std::string& space, const std::string& action, SEMILIN_OPTS) {
        auto opts = options(mode, tolerance, budget, seed);
        auto s = parse(space);
        auto a = parse(action);
        return run([&] { return semilin::cli::linearize(s, a, opts); });
      },
      py::arg("space"), py::arg("action"), SEMILIN_OPT_ARGS);
  m.def(
      "certify",
      [](const std::string& bundle, SEMILIN_OPTS) {
        auto opts = options(mode, tolerance, budget, seed);
        auto b = parse(bundle);
        return run([&] { return semilin::cli::certify(b, opts); });
      },
      py::arg("bundle"), SEMILIN_OPT_ARGS);
}
