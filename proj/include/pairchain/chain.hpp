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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pairchain/complex_matrix.hpp"
#include "pairchain/density_matrix.hpp"
#include "pairchain/evolution.hpp"
#include "pairchain/hamiltonians.hpp"

namespace pairchain {

/// When systems join the working composite and when they are traced out.
enum class Policy {
  /// Compose everything up front, keep it all until the end.
  full,
  /// Compose everything up front, trace each incident system out once its
  /// interaction is over.
  lazy,
  /// Compose only the target and the current incident system per interaction.
  minimal,
};

enum class PolicyChoice { full, lazy, minimal, all };
enum class Integrator { euler, exact };

inline constexpr std::array<Policy, 3> kPolicies = {Policy::full, Policy::lazy, Policy::minimal};

std::string_view to_string(Policy policy) noexcept;
std::string_view to_string(PolicyChoice choice) noexcept;
std::string_view to_string(Integrator integrator) noexcept;
/// These throw ScenarioError naming the valid set.
Policy parse_policy(std::string_view text);
PolicyChoice parse_policy_choice(std::string_view text);
Integrator parse_integrator(std::string_view text);

struct PauliPreparation {
  Axis axis = Axis::z;
  bool positive = true;

  friend bool operator==(const PauliPreparation&, const PauliPreparation&) = default;
};

/// Either a named Pauli eigenstate or an explicit density matrix.
using Preparation = std::variant<PauliPreparation, ComplexMatrix>;

struct SystemSpec {
  std::string label;
  Preparation prep;
  /// Local Hamiltonian added to the pair term while this system interacts.
  std::optional<ComplexMatrix> drift;

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

struct Interaction {
  PairCoupling coupling;
  EvolutionParams params;

  friend bool operator==(const Interaction&, const Interaction&) = default;
};

/// A persistent target system interacting, one pair at a time, with a stream
/// of incident systems.
struct Scenario {
  std::vector<SystemSpec> systems;
  /// Strictly sequential; interaction k starts when k-1 has finished.
  std::vector<Interaction> interactions;
  PolicyChoice policy = PolicyChoice::all;
  Integrator integrator = Integrator::euler;
  /// Inferred from the schedule when absent.
  std::optional<std::string> target;
  std::size_t max_dim = kDefaultMaxDim;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// The built-in three-qubit example: A, B, C prepared in the +x, +y, +z
/// eigenstates; Heisenberg coupling 1 between (A,B) then (A,C); Euler with
/// dt = 1e-4 for 500 steps each.
Scenario reference_scenario();

/// Throws ScenarioError describing the first problem found. Besides label and
/// operator checks this enforces the target/incident shape: one system takes
/// part in every interaction and every other system in at most one.
void validate_scenario(const Scenario& scenario);

/// The target label of a valid scenario, or nullopt when there are no interactions.
std::optional<std::string> schedule_target(const Scenario& scenario);

/// Initial state of one system, labelled with its name.
DensityMatrix prepare(const SystemSpec& system);

struct QubitReadout {
  std::array<double, 3> bloch_vector{};
  BlochParams bloch;
  /// Unclamped P_x, P_y, P_z.
  std::array<double, 3> probabilities{};
};

struct SystemSnapshot {
  std::string label;
  DensityMatrix state;
  /// Present for two-level systems.
  std::optional<QubitReadout> qubit;
};

struct PairSum {
  /// 1-based index of the interaction between `first` and `second`.
  std::size_t interaction = 0;
  std::string first;
  std::string second;
  std::array<double, 3> sums{};
};

struct Snapshot {
  /// 0 is the initial stage, k the end of interaction k.
  std::size_t stage = 0;
  /// In scenario declaration order.
  std::vector<SystemSnapshot> systems;
  /// Probability sums for the pair that just finished interacting and for the
  /// pair about to start, when both members are qubits.
  std::vector<PairSum> pair_sums;

  const SystemSnapshot& at(std::string_view label) const;
};

struct Report {
  Policy policy = Policy::minimal;
  Integrator integrator = Integrator::euler;
  /// interactions.size() + 1 entries.
  std::vector<Snapshot> snapshots;
  double wall_time_seconds = 0.0;
  /// Largest matrix dimension held during the run.
  std::size_t peak_dim = 0;
  /// 8 dim^3 per complex matrix product of the evolution kernels.
  double estimated_flops = 0.0;
  /// max |tr(composite) - 1| over every composite after an interaction.
  double max_trace_deviation = 0.0;

  const Snapshot& final_snapshot() const { return snapshots.back(); }
};

/// Runs the scenario under one policy with scenario.integrator.
/// Throws ScenarioError for an invalid scenario and CapacityError when the
/// policy's composite exceeds scenario.max_dim.
Report run_chain(const Scenario& scenario, Policy policy);

/// peak_dim that run_chain records for `policy`.
std::size_t expected_peak_dim(const Scenario& scenario, Policy policy);

struct PolicyComparison {
  /// Largest elementwise difference between any two policies' reduced states,
  /// over every snapshot including the final one.
  double max_state_deviation = 0.0;
  /// Largest difference in any snapshot probability.
  double max_probability_deviation = 0.0;
  std::vector<Report> reports;

  double max_deviation() const noexcept {
    return max_state_deviation > max_probability_deviation ? max_state_deviation
                                                            : max_probability_deviation;
  }
};

/// Runs full, lazy and minimal and measures how far apart they end up.
PolicyComparison compare_policies(const Scenario& scenario);

/// Largest deviation between two reports of the same scenario.
PolicyComparison compare_reports(const Report& a, const Report& b);

/// Probabilities laid out per qubit and per stage, followed by pair-sum rows.
struct ProbabilityTable {
  struct Row {
    std::string label;
    bool pair_sum = false;
    /// One cell per stage; empty where the row has no value at that stage.
    std::vector<std::optional<std::array<double, 3>>> cells;
  };
  std::vector<std::string> stage_names;
  std::vector<Row> rows;
};

/// "Initial", "After 1st interaction", "After 2nd interaction", ...
std::string stage_name(std::size_t stage);

/// Qubit probabilities clamped to [0, 1]; one pair-sum row per interaction
/// between qubits, filled at the stage before and the stage after it.
ProbabilityTable snapshot_report(const Report& report);

}  // namespace pairchain
