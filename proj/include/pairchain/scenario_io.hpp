// Copyright 2026 The pairchain Authors
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pairchain/chain.hpp"

namespace pairchain {

/// Parses and validates a JSON scenario document.
///
/// Schema (all keys other than `systems` optional):
///
///     {
///       "systems": [
///         {"label": "A", "prep": {"pauli": {"axis": "x", "sign": "+"}}},
///         {"label": "B", "prep": {"matrix": [[[0.5, 0], [0, -0.5]], [[0, 0.5], [0.5, 0]]]},
///          "drift": [[1, 0], [0, -1]]}
///       ],
///       "interactions": [
///         {"pair": ["A", "B"], "kind": "heisenberg", "coupling": 1.0,
///          "dt": 1e-4, "steps": 500},
///         {"pair": ["A", "C"], "kind": "custom", "matrix": [[...], ...]}
///       ],
///       "policy": "all",            // full | lazy | minimal | all
///       "integrator": "euler",      // euler | exact
///       "target": "A",
///       "max_dim": 4096
///     }
///
/// Matrices are arrays of rows; an entry is [re, im] or a bare real number.
/// Defaults: kind heisenberg, coupling 1, dt 1e-4, steps 500, policy all,
/// integrator euler. Unknown keys are rejected.
///
/// Every failure, including malformed JSON and arbitrary bytes, is reported as
/// ScenarioError. Syntax errors carry line and column; semantic errors carry
/// the JSON pointer of the offending value.
Scenario parse_scenario(std::string_view text);

/// Pretty-printed JSON that parse_scenario() reads back to an equal Scenario.
std::string serialize_scenario(const Scenario& scenario);

/// Reads and parses a file; an unreadable path is a ScenarioError.
Scenario load_scenario_file(const std::filesystem::path& path);

}  // namespace pairchain
