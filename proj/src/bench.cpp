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

#include "pairchain/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "pairchain/errors.hpp"

namespace pairchain {
namespace {

double median(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  return n % 2 == 1 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

std::string incident_label(std::size_t k) {
  // B, C, ..., Z, then I26, I27, ...
  if (k < 25) return std::string(1, static_cast<char>('B' + k));
  return "I" + std::to_string(k + 1);
}

struct TimedRecord {
  BenchRecord record;
  Report last;
};

TimedRecord time_with_report(const Scenario& scenario, Policy policy, std::size_t repeats,
                             std::size_t warmup) {
  if (repeats < 3) throw std::invalid_argument("time_policy: repeats must be at least 3");
  for (std::size_t i = 0; i < warmup; ++i) (void)run_chain(scenario, policy);

  TimedRecord out;
  out.record.policy = policy;
  out.record.n_incident = scenario.interactions.size();
  for (std::size_t i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    out.last = run_chain(scenario, policy);
    out.record.wall_time_runs.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  out.record.wall_time_median = median(out.record.wall_time_runs);
  out.record.peak_dim = out.last.peak_dim;
  out.record.estimated_flops = out.last.estimated_flops;
  return out;
}

}  // namespace

BenchRecord time_policy(const Scenario& scenario, Policy policy, std::size_t repeats,
                        std::size_t warmup) {
  return time_with_report(scenario, policy, repeats, warmup).record;
}

Scenario incident_chain(const ScalingTemplate& base, std::size_t n_incident) {
  if (base.incident_preps.empty()) {
    throw ScenarioError("scaling template needs at least one incident preparation");
  }
  Scenario s;
  s.systems.push_back({"A", base.target_prep, std::nullopt});
  for (std::size_t k = 0; k < n_incident; ++k) {
    const std::string label = incident_label(k);
    s.systems.push_back({label, base.incident_preps[k % base.incident_preps.size()], std::nullopt});
    s.interactions.push_back(
        {PairCoupling{"A", label, base.coupling, CouplingKind::heisenberg, {}}, base.params});
  }
  s.integrator = base.integrator;
  s.max_dim = base.max_dim;
  return s;
}

std::vector<BenchRecord> scaling_suite(const ScalingTemplate& base, std::size_t n_min,
                                       std::size_t n_max) {
  std::vector<BenchRecord> records;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const Scenario scenario = incident_chain(base, n);
    // Minimal runs first and serves as the deviation reference.
    const TimedRecord reference = time_with_report(scenario, Policy::minimal, base.repeats, base.warmup);
    std::vector<BenchRecord> row;
    for (Policy policy : {Policy::full, Policy::lazy}) {
      if (expected_peak_dim(scenario, policy) > scenario.max_dim) {
        BenchRecord skipped;
        skipped.policy = policy;
        skipped.n_incident = n;
        skipped.skipped = true;
        skipped.skip_reason = "composite dimension exceeds cap " + std::to_string(scenario.max_dim);
        row.push_back(std::move(skipped));
        continue;
      }
      TimedRecord timed = time_with_report(scenario, policy, base.repeats, base.warmup);
      timed.record.deviation_vs_minimal = compare_reports(timed.last, reference.last).max_deviation();
      row.push_back(std::move(timed.record));
    }
    row.push_back(reference.record);
    records.insert(records.end(), row.begin(), row.end());
  }
  return records;
}

}  // namespace pairchain
