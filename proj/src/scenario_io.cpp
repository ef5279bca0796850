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

#include "pairchain/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "pairchain/errors.hpp"

namespace pairchain {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ScenarioError("scenario " + (where.empty() ? std::string("/") : where) + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(where, "unknown key '" + key + "'");
  }
}

const json& require_object(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  return j;
}

const json* find(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::string read_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

double read_number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "number is not finite");
  return v;
}

std::size_t read_count(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::size_t>();
  fail(where, "expected a non-negative integer");
}

Complex read_entry(const json& j, const std::string& where) {
  if (j.is_number()) return read_number(j, where);
  if (j.is_array() && j.size() == 2) {
    return {read_number(j[0], where + "/0"), read_number(j[1], where + "/1")};
  }
  fail(where, "matrix entry must be a number or an [re, im] pair");
}

ComplexMatrix read_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "matrix must be a non-empty array of rows");
  const std::size_t n = j.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string row_where = where + "/" + std::to_string(r);
    const json& row = j[r];
    if (!row.is_array() || row.size() != n) {
      fail(row_where, "matrix rows must have " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      entries.push_back(read_entry(row[c], row_where + "/" + std::to_string(c)));
    }
  }
  return ComplexMatrix(n, std::move(entries));
}

Preparation read_prep(const json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown_keys(j, where, {"pauli", "matrix"});
  const json* pauli = find(j, "pauli");
  const json* matrix = find(j, "matrix");
  if ((pauli != nullptr) == (matrix != nullptr)) {
    fail(where, "prep needs exactly one of 'pauli' or 'matrix'");
  }
  if (matrix) return read_matrix(*matrix, where + "/matrix");

  const std::string pw = where + "/pauli";
  require_object(*pauli, pw);
  reject_unknown_keys(*pauli, pw, {"axis", "sign"});
  PauliPreparation prep;
  const json* axis = find(*pauli, "axis");
  if (!axis) fail(pw, "missing 'axis'");
  try {
    prep.axis = parse_axis(read_string(*axis, pw + "/axis"));
  } catch (const LayoutError& e) {
    fail(pw + "/axis", e.what());
  }
  if (const json* sign = find(*pauli, "sign")) {
    const std::string s = read_string(*sign, pw + "/sign");
    if (s != "+" && s != "-") fail(pw + "/sign", "sign must be \"+\" or \"-\"");
    prep.positive = s == "+";
  }
  return prep;
}

SystemSpec read_system(const json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown_keys(j, where, {"label", "prep", "drift"});
  SystemSpec s;
  const json* label = find(j, "label");
  if (!label) fail(where, "missing 'label'");
  s.label = read_string(*label, where + "/label");
  const json* prep = find(j, "prep");
  if (!prep) fail(where, "missing 'prep'");
  s.prep = read_prep(*prep, where + "/prep");
  if (const json* drift = find(j, "drift")) s.drift = read_matrix(*drift, where + "/drift");
  return s;
}

Interaction read_interaction(const json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown_keys(j, where, {"pair", "kind", "coupling", "dt", "steps", "matrix"});
  Interaction it;
  const json* pair = find(j, "pair");
  if (!pair) fail(where, "missing 'pair'");
  if (!pair->is_array() || pair->size() != 2) fail(where + "/pair", "expected two labels");
  it.coupling.site_i = read_string((*pair)[0], where + "/pair/0");
  it.coupling.site_j = read_string((*pair)[1], where + "/pair/1");

  if (const json* kind = find(j, "kind")) {
    const std::string k = read_string(*kind, where + "/kind");
    if (k == "heisenberg") {
      it.coupling.kind = CouplingKind::heisenberg;
    } else if (k == "custom") {
      it.coupling.kind = CouplingKind::custom;
    } else {
      fail(where + "/kind", "unknown kind '" + k + "' (expected one of heisenberg, custom)");
    }
  }
  const json* matrix = find(j, "matrix");
  if (it.coupling.kind == CouplingKind::custom) {
    if (!matrix) fail(where, "custom coupling needs 'matrix'");
    it.coupling.custom = read_matrix(*matrix, where + "/matrix");
  } else if (matrix) {
    fail(where + "/matrix", "'matrix' is only valid for kind \"custom\"");
  }
  if (const json* c = find(j, "coupling")) it.coupling.coupling = read_number(*c, where + "/coupling");
  if (const json* dt = find(j, "dt")) it.params.dt = read_number(*dt, where + "/dt");
  if (const json* steps = find(j, "steps")) it.params.steps = read_count(*steps, where + "/steps");
  return it;
}

json write_matrix(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.what() carries "line L, column C".
    throw ScenarioError(std::string("scenario syntax error: ") + e.what());
  }

  Scenario s;
  try {
    require_object(doc, "");
    reject_unknown_keys(doc, "",
                        {"systems", "interactions", "policy", "integrator", "target", "max_dim"});
    const json* systems = find(doc, "systems");
    if (!systems) fail("", "missing 'systems'");
    if (!systems->is_array() || systems->empty()) fail("/systems", "expected a non-empty array");
    for (std::size_t k = 0; k < systems->size(); ++k) {
      s.systems.push_back(read_system((*systems)[k], "/systems/" + std::to_string(k)));
    }
    if (const json* interactions = find(doc, "interactions")) {
      if (!interactions->is_array()) fail("/interactions", "expected an array");
      for (std::size_t k = 0; k < interactions->size(); ++k) {
        s.interactions.push_back(
            read_interaction((*interactions)[k], "/interactions/" + std::to_string(k)));
      }
    }
    if (const json* policy = find(doc, "policy")) {
      s.policy = parse_policy_choice(read_string(*policy, "/policy"));
    }
    if (const json* integrator = find(doc, "integrator")) {
      s.integrator = parse_integrator(read_string(*integrator, "/integrator"));
    }
    if (const json* target = find(doc, "target")) s.target = read_string(*target, "/target");
    if (const json* max_dim = find(doc, "max_dim")) s.max_dim = read_count(*max_dim, "/max_dim");
    validate_scenario(s);
  } catch (const ScenarioError&) {
    throw;
  } catch (const Error& e) {
    throw ScenarioError(std::string("scenario: ") + e.what());
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("scenario: ") + e.what());
  }
  return s;
}

std::string serialize_scenario(const Scenario& scenario) {
  json doc;
  json systems = json::array();
  for (const auto& sys : scenario.systems) {
    json entry{{"label", sys.label}};
    if (const auto* pauli = std::get_if<PauliPreparation>(&sys.prep)) {
      entry["prep"] = {{"pauli",
                        {{"axis", std::string(to_string(pauli->axis))},
                         {"sign", pauli->positive ? "+" : "-"}}}};
    } else {
      entry["prep"] = {{"matrix", write_matrix(std::get<ComplexMatrix>(sys.prep))}};
    }
    if (sys.drift) entry["drift"] = write_matrix(*sys.drift);
    systems.push_back(std::move(entry));
  }
  doc["systems"] = std::move(systems);

  json interactions = json::array();
  for (const auto& it : scenario.interactions) {
    json entry{{"pair", json::array({it.coupling.site_i, it.coupling.site_j})},
               {"kind", it.coupling.kind == CouplingKind::heisenberg ? "heisenberg" : "custom"},
               {"coupling", it.coupling.coupling},
               {"dt", it.params.dt},
               {"steps", it.params.steps}};
    if (it.coupling.kind == CouplingKind::custom) entry["matrix"] = write_matrix(it.coupling.custom);
    interactions.push_back(std::move(entry));
  }
  doc["interactions"] = std::move(interactions);
  doc["policy"] = std::string(to_string(scenario.policy));
  doc["integrator"] = std::string(to_string(scenario.integrator));
  if (scenario.target) doc["target"] = *scenario.target;
  if (scenario.max_dim != kDefaultMaxDim) doc["max_dim"] = scenario.max_dim;
  return doc.dump(2) + "\n";
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw ScenarioError("cannot read scenario file '" + path.string() + "'");
  return parse_scenario(buffer.str());
}

}  // namespace pairchain
