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

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "pairchain/bench.hpp"
#include "pairchain/errors.hpp"

using namespace pairchain;

TEST_SUITE("bench") {
  TEST_CASE("incident_chain with two incidents is the built-in scenario") {
    CHECK(incident_chain(ScalingTemplate{}, 2) == reference_scenario());
  }

  TEST_CASE("incident_chain labels and schedule") {
    const Scenario s = incident_chain(ScalingTemplate{}, 30);
    REQUIRE(s.systems.size() == 31);
    CHECK(s.systems[0].label == "A");
    CHECK(s.systems[1].label == "B");
    CHECK(s.systems[25].label == "Z");
    CHECK(s.systems[26].label == "I26");
    CHECK(s.interactions.size() == 30);
    CHECK_NOTHROW(validate_scenario(s));
    CHECK(schedule_target(s) == "A");
  }

  TEST_CASE("time_policy records repeats and rejects too few") {
    ScalingTemplate t;
    t.params.steps = 5;
    const Scenario s = incident_chain(t, 2);
    const BenchRecord r = time_policy(s, Policy::lazy, 3, 0);
    CHECK(r.wall_time_runs.size() == 3);
    CHECK(r.policy == Policy::lazy);
    CHECK(r.n_incident == 2);
    CHECK(r.peak_dim == 8);
    auto runs = r.wall_time_runs;
    std::sort(runs.begin(), runs.end());
    CHECK(r.wall_time_median == runs[1]);
    CHECK_THROWS_AS((void)time_policy(s, Policy::lazy, 2), std::invalid_argument);
  }

  TEST_CASE("scaling_suite ordering, peak dims and FLOP ratios") {
    ScalingTemplate t;
    t.params.steps = 3;
    t.warmup = 0;
    const auto records = scaling_suite(t, 1, 4);
    REQUIRE(records.size() == 12);
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto& full = records[(n - 1) * 3];
      const auto& lazy = records[(n - 1) * 3 + 1];
      const auto& minimal = records[(n - 1) * 3 + 2];
      CHECK(full.policy == Policy::full);
      CHECK(lazy.policy == Policy::lazy);
      CHECK(minimal.policy == Policy::minimal);
      for (const auto* r : {&full, &lazy, &minimal}) {
        CHECK(r->n_incident == n);
        CHECK_FALSE(r->skipped);
        CHECK(r->deviation_vs_minimal <= 1e-12);
      }
      CHECK(full.peak_dim == (std::size_t{2} << n));
      CHECK(minimal.peak_dim == 4);
      // Full pays dim^3 on 2^(n+1) for n interactions; minimal pays 4^3 each.
      const double ratio = minimal.estimated_flops / full.estimated_flops;
      const double dim = static_cast<double>(full.peak_dim);
      CHECK(ratio == doctest::Approx(64.0 / (dim * dim * dim)));
      if (n > 1) CHECK(lazy.estimated_flops < full.estimated_flops);
      CHECK(minimal.estimated_flops <= lazy.estimated_flops);
    }
  }

  TEST_CASE("scaling_suite skips cells above the cap") {
    ScalingTemplate t;
    t.params.steps = 2;
    t.warmup = 0;
    t.max_dim = 8;
    const auto records = scaling_suite(t, 3, 3);
    REQUIRE(records.size() == 3);
    CHECK(records[0].skipped);
    CHECK(records[1].skipped);
    CHECK_FALSE(records[2].skipped);
    CHECK_FALSE(records[0].skip_reason.empty());
  }
}
