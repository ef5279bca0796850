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

#include <random>
#include <string>

#include "pairchain/errors.hpp"
#include "pairchain/scenario_io.hpp"
#include "support/test_support.hpp"

using namespace pairchain;
using namespace pairchain::testing;

namespace {

const std::string kDataDir = PAIRCHAIN_DATA_DIR;

std::string error_of(std::string_view text) {
  try {
    (void)parse_scenario(text);
  } catch (const ScenarioError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("scenario_io") {
  TEST_CASE("bundled scenario file equals the built-in scenario") {
    CHECK(load_scenario_file(kDataDir + "/reference_scenario.json") == reference_scenario());
  }

  TEST_CASE("defaults and matrix entries") {
    const Scenario s = parse_scenario(R"({
      "systems": [
        {"label": "A", "prep": {"matrix": [[0.5, [0, -0.5]], [[0, 0.5], 0.5]]}},
        {"label": "B", "prep": {"pauli": {"axis": "z", "sign": "-"}}, "drift": [[1, 0], [0, -1]]}
      ],
      "interactions": [{"pair": ["A", "B"]}]
    })");
    REQUIRE(s.systems.size() == 2);
    const auto& m = std::get<ComplexMatrix>(s.systems[0].prep);
    CHECK(m(0, 1) == Complex(0.0, -0.5));
    CHECK(m(1, 0) == Complex(0.0, 0.5));
    CHECK(std::get<PauliPreparation>(s.systems[1].prep) == PauliPreparation{Axis::z, false});
    REQUIRE(s.systems[1].drift);
    CHECK((*s.systems[1].drift)(1, 1) == Complex(-1.0));
    const auto& it = s.interactions.at(0);
    CHECK(it.coupling.kind == CouplingKind::heisenberg);
    CHECK(it.coupling.coupling == 1.0);
    CHECK(it.params == EvolutionParams{1e-4, 500});
    CHECK(s.policy == PolicyChoice::all);
    CHECK(s.integrator == Integrator::euler);
    CHECK(s.max_dim == kDefaultMaxDim);
  }

  TEST_CASE("round trip through serialize_scenario") {
    Rng rng(501);
    for (int trial = 0; trial < 10; ++trial) {
      Scenario s = random_scenario(rng);
      s.policy = trial % 2 ? PolicyChoice::minimal : PolicyChoice::all;
      s.integrator = trial % 3 ? Integrator::euler : Integrator::exact;
      if (trial % 4 == 0) s.target = "A";
      s.systems[0].drift = random_hermitian(2, rng);
      Interaction custom;
      custom.coupling = {"A", "Q", 0.25, CouplingKind::custom, random_hermitian(6, rng)};
      custom.params = {2e-3, 17};
      s.systems.push_back({"Q", random_density_matrix(3, rng), std::nullopt});
      s.interactions.push_back(custom);
      s.max_dim = 1000 + static_cast<std::size_t>(trial);
      CHECK(parse_scenario(serialize_scenario(s)) == s);
    }
    CHECK(parse_scenario(serialize_scenario(reference_scenario())) == reference_scenario());
  }

  TEST_CASE("errors name the problem and where it is") {
    CHECK(error_of("{\"systems\": [").find("line") != std::string::npos);
    CHECK(error_of("[]") != "");
    CHECK(error_of("{}").find("systems") != std::string::npos);
    const std::string unknown_key = error_of(R"({"systems": [{"label": "A", "prep": {"pauli": {"axis": "x"}}, "colour": 1}]})");
    CHECK(unknown_key.find("colour") != std::string::npos);
    CHECK(unknown_key.find("/systems/0") != std::string::npos);
    const std::string bad_policy = error_of(R"({"systems": [{"label": "A", "prep": {"pauli": {"axis": "x"}}}], "policy": "frugal"})");
    CHECK(bad_policy.find("frugal") != std::string::npos);
    CHECK(error_of(R"({"systems": [{"label": "A", "prep": {"pauli": {"axis": "w"}}}]})") != "");
    CHECK(error_of(R"({"systems": [{"label": "A", "prep": {"matrix": [[1, 0], [0]]}}]})") != "");
    CHECK(error_of(R"({"systems": [{"label": "A", "prep": {"matrix": [[0.6, 0], [0, 0.6]]}}]})")
              .find("trace") != std::string::npos);
    CHECK(error_of(R"({"systems": [{"label": "A", "prep": {"pauli": {"axis": "x"}}}],
                       "interactions": [{"pair": ["A", "B"]}]})")
              .find("'B'") != std::string::npos);
    CHECK(error_of(R"({"systems": [{"label": "A", "prep": {"pauli": {"axis": "x"}}},
                                   {"label": "B", "prep": {"pauli": {"axis": "x"}}}],
                       "interactions": [{"pair": ["A", "B"], "steps": -3}]})") != "");
    CHECK(error_of(R"({"systems": [{"label": "A", "prep": {"pauli": {"axis": "x"}}},
                                   {"label": "B", "prep": {"pauli": {"axis": "x"}}}],
                       "interactions": [{"pair": ["A", "B"], "dt": 0}]})") != "");
    CHECK_THROWS_AS((void)load_scenario_file(kDataDir + "/does_not_exist.json"), ScenarioError);
  }

  TEST_CASE("arbitrary bytes and mutated documents only ever raise ScenarioError") {
    Rng rng(503);
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<std::size_t> len(0, 64);
    auto attempt = [](const std::string& text) {
      try {
        (void)parse_scenario(text);
      } catch (const ScenarioError&) {
      } catch (const std::exception& e) {
        FAIL("unexpected exception type: " << e.what());
      }
    };
    for (int trial = 0; trial < 500; ++trial) {
      std::string text(len(rng), '\0');
      for (auto& c : text) c = static_cast<char>(byte(rng));
      attempt(text);
    }
    const std::string base = serialize_scenario(reference_scenario());
    const std::string alphabet = "{}[]\",:0123456789.-+eEabcxyz \n";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      std::string text = base;
      std::uniform_int_distribution<std::size_t> pos(0, text.size() - 1);
      const int edits = 1 + trial % 4;
      for (int e = 0; e < edits; ++e) {
        const std::size_t p = pos(rng);
        switch (trial % 3) {
          case 0:
            text[p] = alphabet[pick(rng)];
            break;
          case 1:
            text.erase(p, 1);
            break;
          default:
            text.insert(p, 1, alphabet[pick(rng)]);
            break;
        }
        if (text.empty()) break;
        pos = std::uniform_int_distribution<std::size_t>(0, text.size() - 1);
      }
      attempt(text);
    }
  }
}
