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

#ifndef SEMILIN_COMMANDS_HPP
#define SEMILIN_COMMANDS_HPP

// One function per CLI subcommand. Inputs are parsed JSON documents, the
// result carries the JSON report and the process exit code. Shared by the
// command line tool and the Python module.

#include "semilin/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace semilin::cli {

using io::json;

enum ExitCode : int {
  kOk = 0,
  kViolated = 1,
  kInconclusive = 2,
  kStructural = 3,
};

inline constexpr std::size_t kDefaultBudget = 10000;

/// kDefaultBudget unless SEMILIN_DEFAULT_BUDGET holds a positive integer.
std::size_t default_budget();

struct CommandOptions {
  NumericMode mode;
  std::size_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
};

struct CommandResult {
  json output;
  int exit_code = kOk;
};

/// Metric axioms, plus non-expansivity when an action is given. Implicit
/// spaces are checked on the materialized closure of their seeds.
CommandResult validate(const json& space, const std::optional<json>& action, const CommandOptions& opts);

CommandResult orbit(const json& space, const json& action, const std::string& point, const CommandOptions& opts);

/// Fixed-point extension, or the constant extension when `constant` is set.
CommandResult extend(const json& space, const json& action, const std::optional<std::string>& constant,
                     const CommandOptions& opts);

/// Norm of a combination with its transport plan and potential. The base
/// defaults to "__z" on extension files and to the first point otherwise.
CommandResult norm(const json& space, const json& combination, const std::optional<std::string>& base,
                   const CommandOptions& opts);

/// Group identification checks for isometric group actions. Other actions
/// get the orbit-not-fixed finding and exit code 3, since identification
/// does not apply. `sets` optionally lists two subsets, comma separated,
/// whose Hausdorff distance is reported.
CommandResult hausdorff(const json& space, const json& action, const std::vector<std::string>& sets,
                        const CommandOptions& opts);

CommandResult linearize(const json& space, const json& action, const CommandOptions& opts);

CommandResult certify(const json& bundle, const CommandOptions& opts);

/// Runs `body` and maps library exceptions to exit codes: structural and
/// precondition errors to 3, unclosed orbits to 2, invariant failures to 1.
template <class F>
CommandResult guarded(F&& body);

/// Reads and parses a JSON file; StructuralError when unreadable.
json load_json(const std::string& path);

/// Exit code for a finished report: 0 ok, 1 violations, 2 inconclusive.
int exit_code_for(const ValidationReport& report);

}  // namespace semilin::cli

#include "semilin/errors.hpp"

namespace semilin::cli {

template <class F>
CommandResult guarded(F&& body) {
  auto fail = [](int code, const char* kind, const std::string& message) {
    return CommandResult{json{{"error", kind}, {"message", message}}, code};
  };
  try {
    return body();
  } catch (const UnboundedOrbitError& e) {
    CommandResult r = fail(kInconclusive, "unbounded-orbit", e.what());
    r.output["point"] = e.point();
    r.output["budget"] = e.budget();
    return r;
  } catch (const StructuralError& e) {
    return fail(kStructural, "structural", e.what());
  } catch (const PreconditionError& e) {
    return fail(kStructural, "precondition", e.what());
  } catch (const json::exception& e) {
    return fail(kStructural, "structural", e.what());
  } catch (const InvariantViolation& e) {
    return fail(kViolated, "invariant", e.what());
  }
}

}  // namespace semilin::cli

#endif  // SEMILIN_COMMANDS_HPP
