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

#include <cstddef>
#include <string>
#include <vector>

#include "pairchain/chain.hpp"

namespace pairchain {

struct BenchRecord {
  Policy policy = Policy::minimal;
  std::size_t n_incident = 0;
  /// Median of wall_time_runs, seconds.
  double wall_time_median = 0.0;
  /// Post-warmup samples, seconds, in execution order.
  std::vector<double> wall_time_runs;
  std::size_t peak_dim = 0;
  double estimated_flops = 0.0;
  /// Largest deviation of this policy's states from the minimal policy's for
  /// the same scenario; 0 for the minimal policy itself.
  double deviation_vs_minimal = 0.0;
  /// Set when the cell could not run (for example the dimension cap).
  bool skipped = false;
  std::string skip_reason;
};

/// Runs `warmup` discarded and then `repeats` timed executions of run_chain.
/// Throws std::invalid_argument when repeats < 3; run_chain errors propagate.
BenchRecord time_policy(const Scenario& scenario, Policy policy, std::size_t repeats = 3,
                        std::size_t warmup = 1);

/// Shape of the scenarios generated by scaling_suite.
struct ScalingTemplate {
  /// Incident systems cycle through these preparations; the target starts in
  /// target_prep.
  PauliPreparation target_prep{Axis::x, true};
  std::vector<PauliPreparation> incident_preps{{Axis::y, true}, {Axis::z, true}};
  double coupling = 1.0;
  EvolutionParams params{1e-4, 500};
  Integrator integrator = Integrator::euler;
  std::size_t max_dim = kDefaultMaxDim;
  std::size_t repeats = 3;
  std::size_t warmup = 1;
};

/// Target qubit "A" interacting in turn with n fresh qubits "B", "C", ...
/// With the default template and n = 2 this is reference_scenario().
Scenario incident_chain(const ScalingTemplate& base, std::size_t n_incident);

/// For every n in [n_min, n_max] and every policy, one BenchRecord.
/// Cells exceeding base.max_dim come back with skipped = true.
std::vector<BenchRecord> scaling_suite(const ScalingTemplate& base, std::size_t n_min,
                                       std::size_t n_max);

}  // namespace pairchain
