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

#include "pairchain/chain.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>

#include "pairchain/errors.hpp"

namespace pairchain {
namespace {

const std::string& incident_of(const Interaction& it, const std::string& target) {
  return it.coupling.site_i == target ? it.coupling.site_j : it.coupling.site_i;
}

std::size_t system_dim(const SystemSpec& system) {
  if (std::holds_alternative<PauliPreparation>(system.prep)) return 2;
  return std::get<ComplexMatrix>(system.prep).dim();
}

const SystemSpec& find_system(const Scenario& scenario, std::string_view label) {
  for (const auto& s : scenario.systems) {
    if (s.label == label) return s;
  }
  throw ScenarioError("unknown system '" + std::string(label) + "'");
}

// Pair term plus the drift of both participants, on `layout`.
ComplexMatrix interaction_generator(const Scenario& scenario, const SubsystemLayout& layout,
                                    const Interaction& it) {
  ComplexMatrix h = heisenberg_embedded(layout, it.coupling);
  for (const auto* site : {&it.coupling.site_i, &it.coupling.site_j}) {
    const auto& drift = find_system(scenario, *site).drift;
    if (drift) h += embed_single_site(layout, *site, *drift);
  }
  return h;
}

double kernel_flops(std::size_t dim, const EvolutionParams& params, Integrator integrator) {
  const double d = static_cast<double>(dim);
  const double per_product = 8.0 * d * d * d;
  if (integrator == Integrator::euler) return 2.0 * per_product * static_cast<double>(params.steps);
  // V diag V^dagger, then U rho U^dagger.
  return 3.0 * per_product;
}

DensityMatrix advance(const DensityMatrix& rho, const ComplexMatrix& h,
                      const EvolutionParams& params, Integrator integrator) {
  if (integrator == Integrator::euler) return evolve_euler(rho, h, params);
  return evolve_exact(rho, h, params.total_time());
}

QubitReadout read_qubit(const DensityMatrix& rho) {
  QubitReadout q;
  q.bloch_vector = bloch_vector(rho);
  q.bloch = bloch_params(rho);
  for (Axis axis : kAxes) {
    q.probabilities[static_cast<std::size_t>(axis)] = measure_prob(rho, axis);
  }
  return q;
}

SystemSnapshot make_system_snapshot(DensityMatrix state) {
  SystemSnapshot s;
  s.label = state.layout().labels().front();
  if (state.dim() == 2) s.qubit = read_qubit(state);
  s.state = std::move(state);
  return s;
}

void add_pair_sum(Snapshot& snap, std::size_t interaction, const PairCoupling& pair) {
  const auto& a = snap.at(pair.site_i);
  const auto& b = snap.at(pair.site_j);
  if (!a.qubit || !b.qubit) return;
  PairSum sum{interaction, pair.site_i, pair.site_j, {}};
  for (std::size_t k = 0; k < 3; ++k) {
    sum.sums[k] = a.qubit->probabilities[k] + b.qubit->probabilities[k];
  }
  snap.pair_sums.push_back(std::move(sum));
}

// Reduced state of every system, in declaration order, from a lookup that
// either traces a composite or returns a stored single-system state.
template <typename Lookup>
Snapshot make_snapshot(const Scenario& scenario, std::size_t stage, Lookup&& lookup) {
  Snapshot snap;
  snap.stage = stage;
  for (const auto& system : scenario.systems) {
    snap.systems.push_back(make_system_snapshot(lookup(system.label)));
  }
  if (stage > 0) add_pair_sum(snap, stage, scenario.interactions[stage - 1].coupling);
  if (stage < scenario.interactions.size()) {
    add_pair_sum(snap, stage + 1, scenario.interactions[stage].coupling);
  }
  return snap;
}

std::vector<DensityMatrix> prepare_all(const Scenario& scenario) {
  std::vector<DensityMatrix> states;
  states.reserve(scenario.systems.size());
  for (const auto& s : scenario.systems) states.push_back(prepare(s));
  return states;
}

std::size_t product_dim(const Scenario& scenario) {
  std::size_t total = 1;
  for (const auto& s : scenario.systems) {
    const std::size_t d = system_dim(s);
    if (total > scenario.max_dim / d) return scenario.max_dim + 1;
    total *= d;
  }
  return total;
}

DensityMatrix compose_checked(std::span<const DensityMatrix> states, std::size_t max_dim,
                              Policy policy) {
  try {
    return tensor_compose(states, max_dim);
  } catch (const CapacityError& e) {
    throw CapacityError(std::string(e.what()) + "; the " + std::string(to_string(policy)) +
                        " policy holds every system at once, use the minimal policy");
  }
}

double trace_deviation(const DensityMatrix& rho) { return std::abs(trace(rho.matrix()) - 1.0); }

void run_composite(const Scenario& scenario, Policy policy, const std::optional<std::string>& target,
                   Report& report) {
  const auto initial = prepare_all(scenario);
  DensityMatrix composite = compose_checked(initial, scenario.max_dim, policy);
  report.peak_dim = composite.dim();
  std::map<std::string, DensityMatrix, std::less<>> expired;

  auto lookup = [&](const std::string& label) {
    if (auto it = expired.find(label); it != expired.end()) return it->second;
    const std::string keep[] = {label};
    return partial_trace(composite, keep);
  };

  for (std::size_t k = 0; k < scenario.interactions.size(); ++k) {
    const Interaction& it = scenario.interactions[k];
    const ComplexMatrix h = interaction_generator(scenario, composite.layout(), it);
    composite = advance(composite, h, it.params, scenario.integrator);
    report.estimated_flops += kernel_flops(composite.dim(), it.params, scenario.integrator);
    report.max_trace_deviation = std::max(report.max_trace_deviation, trace_deviation(composite));

    if (policy == Policy::lazy) {
      const std::string& gone = incident_of(it, *target);
      const std::string only[] = {gone};
      expired.emplace(gone, partial_trace(composite, only));
      std::vector<std::string> rest;
      for (const auto& label : composite.layout().labels()) {
        if (label != gone) rest.push_back(label);
      }
      composite = partial_trace(composite, rest);
    }
    report.snapshots.push_back(make_snapshot(scenario, k + 1, lookup));
  }
}

void run_minimal(const Scenario& scenario, const std::optional<std::string>& target,
                 Report& report) {
  std::map<std::string, DensityMatrix, std::less<>> states;
  for (auto& s : prepare_all(scenario)) {
    report.peak_dim = std::max(report.peak_dim, s.dim());
    states.emplace(s.layout().labels().front(), std::move(s));
  }
  auto lookup = [&](const std::string& label) { return states.at(label); };

  for (std::size_t k = 0; k < scenario.interactions.size(); ++k) {
    const Interaction& it = scenario.interactions[k];
    const std::string& incident = incident_of(it, *target);
    const DensityMatrix pair_states[] = {states.at(*target), states.at(incident)};
    DensityMatrix composite = compose_checked(pair_states, scenario.max_dim, Policy::minimal);
    report.peak_dim = std::max(report.peak_dim, composite.dim());

    const ComplexMatrix h = interaction_generator(scenario, composite.layout(), it);
    composite = advance(composite, h, it.params, scenario.integrator);
    report.estimated_flops += kernel_flops(composite.dim(), it.params, scenario.integrator);
    report.max_trace_deviation = std::max(report.max_trace_deviation, trace_deviation(composite));

    const std::string keep_target[] = {*target};
    const std::string keep_incident[] = {incident};
    states.at(*target) = partial_trace(composite, keep_target);
    states.at(incident) = partial_trace(composite, keep_incident);
    report.snapshots.push_back(make_snapshot(scenario, k + 1, lookup));
  }
}

void track_max(double& worst, double value) { worst = std::max(worst, value); }

}  // namespace

std::string_view to_string(Policy policy) noexcept {
  switch (policy) {
    case Policy::full:
      return "full";
    case Policy::lazy:
      return "lazy";
    case Policy::minimal:
      return "minimal";
  }
  return "?";
}

std::string_view to_string(PolicyChoice choice) noexcept {
  if (choice == PolicyChoice::all) return "all";
  return to_string(static_cast<Policy>(choice));
}

std::string_view to_string(Integrator integrator) noexcept {
  return integrator == Integrator::euler ? "euler" : "exact";
}

Policy parse_policy(std::string_view text) {
  for (Policy p : kPolicies) {
    if (to_string(p) == text) return p;
  }
  throw ScenarioError("unknown policy '" + std::string(text) +
                      "' (expected one of full, lazy, minimal)");
}

PolicyChoice parse_policy_choice(std::string_view text) {
  if (text == "all") return PolicyChoice::all;
  for (Policy p : kPolicies) {
    if (to_string(p) == text) return static_cast<PolicyChoice>(p);
  }
  throw ScenarioError("unknown policy '" + std::string(text) +
                      "' (expected one of full, lazy, minimal, all)");
}

Integrator parse_integrator(std::string_view text) {
  if (text == "euler") return Integrator::euler;
  if (text == "exact") return Integrator::exact;
  throw ScenarioError("unknown integrator '" + std::string(text) +
                      "' (expected one of euler, exact)");
}

Scenario reference_scenario() {
  Scenario s;
  s.systems = {
      {"A", PauliPreparation{Axis::x, true}, std::nullopt},
      {"B", PauliPreparation{Axis::y, true}, std::nullopt},
      {"C", PauliPreparation{Axis::z, true}, std::nullopt},
  };
  const EvolutionParams params{1e-4, 500};
  s.interactions = {
      {PairCoupling{"A", "B", 1.0, CouplingKind::heisenberg, {}}, params},
      {PairCoupling{"A", "C", 1.0, CouplingKind::heisenberg, {}}, params},
  };
  return s;
}

DensityMatrix prepare(const SystemSpec& system) {
  if (const auto* pauli = std::get_if<PauliPreparation>(&system.prep)) {
    return pauli_eigenstate(pauli->axis, pauli->positive, system.label);
  }
  const auto& m = std::get<ComplexMatrix>(system.prep);
  return DensityMatrix(m, SubsystemLayout::single(system.label, m.dim()));
}

std::optional<std::string> schedule_target(const Scenario& scenario) {
  if (scenario.target) return scenario.target;
  if (scenario.interactions.empty()) return std::nullopt;
  const auto& first = scenario.interactions.front().coupling;
  if (scenario.interactions.size() == 1) return first.site_i;
  for (const auto* candidate : {&first.site_i, &first.site_j}) {
    const bool everywhere =
        std::all_of(scenario.interactions.begin(), scenario.interactions.end(),
                    [&](const Interaction& it) {
                      return it.coupling.site_i == *candidate || it.coupling.site_j == *candidate;
                    });
    if (everywhere) return *candidate;
  }
  throw ScenarioError(
      "schedule has no target: no system takes part in every interaction");
}

void validate_scenario(const Scenario& scenario) {
  if (scenario.systems.empty()) throw ScenarioError("scenario declares no systems");
  if (scenario.max_dim == 0) throw ScenarioError("max_dim must be positive");

  std::set<std::string, std::less<>> labels;
  for (const auto& s : scenario.systems) {
    if (s.label.empty()) throw ScenarioError("system label must not be empty");
    if (!labels.insert(s.label).second) {
      throw ScenarioError("duplicate system label '" + s.label + "'");
    }
    if (const auto* m = std::get_if<ComplexMatrix>(&s.prep)) {
      if (m->empty()) throw ScenarioError("system '" + s.label + "': empty state matrix");
      if (!m->all_finite()) throw ScenarioError("system '" + s.label + "': non-finite entries");
      const auto diag = validate_density(prepare(s));
      if (!diag.hermitian_ok) {
        throw ScenarioError("system '" + s.label + "': state is not Hermitian (max asymmetry " +
                            std::to_string(diag.hermiticity_defect) + ")");
      }
      if (!diag.trace_ok) {
        throw ScenarioError("system '" + s.label + "': state trace deviates from 1 by " +
                            std::to_string(diag.trace_deviation));
      }
      if (!diag.positive_ok) {
        throw ScenarioError("system '" + s.label + "': state has negative eigenvalue " +
                            std::to_string(diag.min_eigenvalue));
      }
    }
    if (s.drift) {
      if (s.drift->dim() != system_dim(s)) {
        throw ScenarioError("system '" + s.label + "': drift dimension " +
                            std::to_string(s.drift->dim()) + " does not match the system");
      }
      if (!s.drift->all_finite() || hermiticity_defect(*s.drift) > kHermitianTol) {
        throw ScenarioError("system '" + s.label + "': drift Hamiltonian is not Hermitian");
      }
    }
  }

  std::map<std::string, std::size_t, std::less<>> appearances;
  for (std::size_t k = 0; k < scenario.interactions.size(); ++k) {
    const auto& it = scenario.interactions[k];
    const auto& c = it.coupling;
    const std::string where = "interaction " + std::to_string(k + 1);
    for (const auto* site : {&c.site_i, &c.site_j}) {
      if (!labels.contains(*site)) {
        throw ScenarioError(where + ": unknown system '" + *site + "'");
      }
      ++appearances[*site];
    }
    if (c.site_i == c.site_j) {
      throw ScenarioError(where + ": a pair needs two distinct systems, got '" + c.site_i + "' twice");
    }
    if (!std::isfinite(c.coupling)) throw ScenarioError(where + ": coupling is not finite");
    if (!(it.params.dt > 0.0) || !std::isfinite(it.params.dt)) {
      throw ScenarioError(where + ": dt must be positive and finite");
    }
    const std::size_t di = system_dim(find_system(scenario, c.site_i));
    const std::size_t dj = system_dim(find_system(scenario, c.site_j));
    if (c.kind == CouplingKind::heisenberg) {
      if (di != 2 || dj != 2) {
        throw ScenarioError(where + ": Heisenberg coupling requires two qubits");
      }
    } else {
      if (c.custom.dim() != di * dj) {
        throw ScenarioError(where + ": custom matrix has dimension " +
                            std::to_string(c.custom.dim()) + ", expected " +
                            std::to_string(di * dj));
      }
      if (!c.custom.all_finite()) throw ScenarioError(where + ": custom matrix is not finite");
      const double asym = hermiticity_defect(c.custom);
      if (asym > kHermitianTol) {
        throw ScenarioError(where + ": custom matrix is not Hermitian (max asymmetry " +
                            std::to_string(asym) + ")");
      }
    }
  }

  if (scenario.target && !labels.contains(*scenario.target)) {
    throw ScenarioError("target '" + *scenario.target + "' is not a declared system");
  }
  const auto target = schedule_target(scenario);
  if (!target) return;
  for (std::size_t k = 0; k < scenario.interactions.size(); ++k) {
    const auto& c = scenario.interactions[k].coupling;
    if (c.site_i != *target && c.site_j != *target) {
      throw ScenarioError("interaction " + std::to_string(k + 1) + " does not involve the target '" +
                          *target + "'");
    }
  }
  for (const auto& [label, count] : appearances) {
    if (label != *target && count > 1) {
      throw ScenarioError("system '" + label + "' takes part in " + std::to_string(count) +
                          " interactions; an incident system may interact only once");
    }
  }
}

const SystemSnapshot& Snapshot::at(std::string_view label) const {
  for (const auto& s : systems) {
    if (s.label == label) return s;
  }
  throw LayoutError("snapshot has no system '" + std::string(label) + "'");
}

std::size_t expected_peak_dim(const Scenario& scenario, Policy policy) {
  if (policy != Policy::minimal) return product_dim(scenario);
  std::size_t peak = 0;
  for (const auto& s : scenario.systems) peak = std::max(peak, system_dim(s));
  for (const auto& it : scenario.interactions) {
    peak = std::max(peak, system_dim(find_system(scenario, it.coupling.site_i)) *
                              system_dim(find_system(scenario, it.coupling.site_j)));
  }
  return peak;
}

Report run_chain(const Scenario& scenario, Policy policy) {
  validate_scenario(scenario);
  const auto start = std::chrono::steady_clock::now();
  const auto target = schedule_target(scenario);

  Report report;
  report.policy = policy;
  report.integrator = scenario.integrator;
  const auto initial = prepare_all(scenario);
  report.snapshots.push_back(make_snapshot(scenario, 0, [&](const std::string& label) {
    return *std::find_if(initial.begin(), initial.end(), [&](const DensityMatrix& d) {
      return d.layout().labels().front() == label;
    });
  }));

  if (policy == Policy::minimal) {
    run_minimal(scenario, target, report);
  } else {
    run_composite(scenario, policy, target, report);
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

PolicyComparison compare_reports(const Report& a, const Report& b) {
  PolicyComparison cmp;
  if (a.snapshots.size() != b.snapshots.size()) {
    throw DimensionError("compare_reports: reports have different stage counts");
  }
  for (std::size_t k = 0; k < a.snapshots.size(); ++k) {
    const auto& sa = a.snapshots[k];
    const auto& sb = b.snapshots[k];
    for (const auto& sys : sa.systems) {
      const auto& other = sb.at(sys.label);
      track_max(cmp.max_state_deviation, max_abs_diff(sys.state.matrix(), other.state.matrix()));
      if (sys.qubit && other.qubit) {
        for (std::size_t i = 0; i < 3; ++i) {
          track_max(cmp.max_probability_deviation,
                    std::abs(sys.qubit->probabilities[i] - other.qubit->probabilities[i]));
        }
      }
    }
  }
  return cmp;
}

PolicyComparison compare_policies(const Scenario& scenario) {
  PolicyComparison cmp;
  for (Policy p : kPolicies) cmp.reports.push_back(run_chain(scenario, p));
  for (std::size_t i = 0; i < cmp.reports.size(); ++i) {
    for (std::size_t j = i + 1; j < cmp.reports.size(); ++j) {
      const auto pair = compare_reports(cmp.reports[i], cmp.reports[j]);
      track_max(cmp.max_state_deviation, pair.max_state_deviation);
      track_max(cmp.max_probability_deviation, pair.max_probability_deviation);
    }
  }
  return cmp;
}

std::string stage_name(std::size_t stage) {
  if (stage == 0) return "Initial";
  const char* suffix = "th";
  if (stage % 100 < 11 || stage % 100 > 13) {
    switch (stage % 10) {
      case 1:
        suffix = "st";
        break;
      case 2:
        suffix = "nd";
        break;
      case 3:
        suffix = "rd";
        break;
      default:
        break;
    }
  }
  return "After " + std::to_string(stage) + suffix + " interaction";
}

ProbabilityTable snapshot_report(const Report& report) {
  ProbabilityTable table;
  const std::size_t stages = report.snapshots.size();
  for (std::size_t k = 0; k < stages; ++k) table.stage_names.push_back(stage_name(k));

  auto clamped = [](const QubitReadout& q) {
    return std::array<double, 3>{clamp_probability(q.probabilities[0]),
                                 clamp_probability(q.probabilities[1]),
                                 clamp_probability(q.probabilities[2])};
  };

  const auto& first = report.snapshots.front();
  for (const auto& sys : first.systems) {
    if (!sys.qubit) continue;
    ProbabilityTable::Row row{sys.label, false, {}};
    for (const auto& snap : report.snapshots) row.cells.push_back(clamped(*snap.at(sys.label).qubit));
    table.rows.push_back(std::move(row));
  }

  // Interaction k (1-based) runs between stages k-1 and k.
  for (std::size_t k = 1; k < stages; ++k) {
    const auto& before = report.snapshots[k - 1];
    const auto& after = report.snapshots[k];
    const auto pair = std::find_if(after.pair_sums.begin(), after.pair_sums.end(),
                                   [&](const PairSum& p) { return p.interaction == k; });
    if (pair == after.pair_sums.end()) continue;
    ProbabilityTable::Row row{pair->first + "+" + pair->second, true,
                              std::vector<std::optional<std::array<double, 3>>>(stages)};
    for (const Snapshot* snap : {&before, &after}) {
      const auto a = clamped(*snap->at(pair->first).qubit);
      const auto b = clamped(*snap->at(pair->second).qubit);
      row.cells[snap->stage] = std::array<double, 3>{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace pairchain
