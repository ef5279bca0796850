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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pairchain/cli.hpp"
#include "pairchain/errors.hpp"
#include "pairchain/report_io.hpp"
#include "pairchain/scenario_io.hpp"

using namespace pairchain;

namespace {

const std::string kDataDir = PAIRCHAIN_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = main_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("pairchain_test_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

std::string final_row(const std::string& table, const std::string& label) {
  std::istringstream in(table);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(label + " ", 0) == 0) return line;
  }
  return {};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("table rendering of the built-in scenario") {
    const Report r = run_chain(reference_scenario(), Policy::minimal);
    const std::string table = render_table(r);
    const std::string row = final_row(table, "A");
    CHECK(row.find("0.9896 0.5541 0.4558") != std::string::npos);
    CHECK(table.find("A: r=0.98913 theta=95.072 phi=6.3053") != std::string::npos);
    CHECK(table.find("B: r=0.99507 theta=84.299 phi=89.424") != std::string::npos);
    CHECK(table.find("C: r=0.99399 theta=8.481 phi=-83.706") != std::string::npos);
    CHECK(table.find(" \n") == std::string::npos);
  }

  TEST_CASE("zero-interaction table has one stage") {
    Scenario s;
    s.systems = {{"A", PauliPreparation{Axis::x, true}, std::nullopt}};
    const std::string table = render_table(run_chain(s, Policy::full));
    CHECK(table.find("Initial") != std::string::npos);
    CHECK(table.find("After") == std::string::npos);
  }

  TEST_CASE("csv, structured and plot data") {
    const Report r = run_chain(reference_scenario(), Policy::lazy);
    const std::string csv = render_table_csv(r);
    CHECK(csv.rfind("qubit,stage,px,py,pz\n", 0) == 0);
    CHECK(csv.find("A,2,0.9896,0.5541,0.4558\n") != std::string::npos);

    const Report again = run_chain(reference_scenario(), Policy::lazy);
    const Report one[] = {r};
    const Report two[] = {again};
    CHECK(render_structured(one) == render_structured(two));
    CHECK(render_structured(one).find("wall") == std::string::npos);

    const std::string plot = render_plotdata(r);
    CHECK(plot.rfind("qubit,stage,vx,vy,vz,r,theta_deg,phi_deg\n", 0) == 0);
    CHECK(plot.find("C,final,") != std::string::npos);
    CHECK_THROWS_AS((void)parse_report_format("xml"), ScenarioError);
  }

  TEST_CASE("paper-demo") {
    const auto o = run({"paper-demo"});
    CHECK(o.code == kExitOk);
    CHECK(final_row(o.out, "A").find("0.9896 0.5541 0.4558") != std::string::npos);
    CHECK(o.out.find("max policy deviation") != std::string::npos);

    const auto csv = run({"paper-demo", "--policy", "full", "--format", "table-csv"});
    CHECK(csv.code == kExitOk);
    CHECK(csv.out.rfind("qubit,stage,px,py,pz", 0) == 0);
  }

  TEST_CASE("run and compare on files") {
    const std::string file = kDataDir + "/reference_scenario.json";
    CHECK(run({"compare", file}).code == kExitOk);
    CHECK(run({"compare", file, "--integrator", "exact"}).code == kExitOk);

    const auto r = run({"run", file, "--policy", "minimal"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("0.9896 0.5541 0.4558") != std::string::npos);

    const auto out_path = std::filesystem::temp_directory_path() / "pairchain_test_report.json";
    std::filesystem::remove(out_path);
    const auto s = run({"run", file, "--format", "structured", "--out", out_path.string()});
    CHECK(s.code == kExitOk);
    std::ifstream in(out_path);
    std::stringstream written;
    written << in.rdbuf();
    CHECK(written.str().find("\"reports\"") != std::string::npos);
    CHECK(s.out.find("0.9896") != std::string::npos);
    std::filesystem::remove(out_path);
  }

  TEST_CASE("exit codes for bad input") {
    CHECK(run({"run", kDataDir + "/does_not_exist.json"}).code == kExitScenario);

    const auto malformed = temp_file("malformed.json", "{\"systems\": [ {\"label\": ");
    const auto m = run({"run", malformed.string()});
    CHECK(m.code == kExitScenario);
    CHECK(m.err.find("line") != std::string::npos);
    CHECK(run({"compare", malformed.string()}).code == kExitScenario);

    const auto semantic = temp_file("semantic.json", R"({"systems": [{"label": "A", "prep": {"pauli": {"axis": "q"}}}]})");
    CHECK(run({"run", semantic.string()}).code == kExitScenario);

    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"run"}).code == kExitUsage);
    CHECK(run({"paper-demo", "--policy", "frugal"}).code == kExitScenario);
    CHECK(run({"bench", "--incident", "x"}).code == kExitUsage);
    CHECK(run({"bench"}).code == kExitUsage);
    CHECK(run({"bench", "--incident", "2", "--repeats", "1"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);

    const auto blocked = std::filesystem::temp_directory_path() / "pairchain_no_such_dir" / "x.txt";
    CHECK(run({"paper-demo", "--out", blocked.string()}).code == kExitUsage);

    std::filesystem::remove(malformed);
    std::filesystem::remove(semantic);
  }

  TEST_CASE("capacity errors exit 3 and advise the minimal policy") {
    const auto capped = temp_file("capped.json", R"({
      "systems": [{"label": "A", "prep": {"pauli": {"axis": "x"}}},
                  {"label": "B", "prep": {"pauli": {"axis": "y"}}},
                  {"label": "C", "prep": {"pauli": {"axis": "z"}}}],
      "interactions": [{"pair": ["A", "B"], "steps": 5}, {"pair": ["A", "C"], "steps": 5}],
      "max_dim": 4
    })");
    const auto o = run({"run", capped.string(), "--policy", "full"});
    CHECK(o.code == kExitScenario);
    CHECK(o.err.find("minimal") != std::string::npos);
    CHECK(run({"run", capped.string(), "--policy", "minimal"}).code == kExitOk);
    std::filesystem::remove(capped);
  }

  TEST_CASE("bench on a generated chain") {
    const auto o = run({"bench", "--incident", "1:2", "--steps", "2", "--warmup", "0"});
    CHECK(o.code == kExitOk);
    CHECK(o.out.find("minimal") != std::string::npos);
    const auto f = run({"bench", kDataDir + "/reference_scenario.json", "--steps", "2"});
    CHECK(f.code == kExitOk);
  }
}
