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

#include "pairchain/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pairchain/errors.hpp"

namespace pairchain {
namespace {

using nlohmann::json;

template <typename... Args>
std::string printf_string(const char* fmt, Args... args) {
  const int n = std::snprintf(nullptr, 0, fmt, args...);
  std::string out(static_cast<std::size_t>(n), '\0');
  std::snprintf(out.data(), out.size() + 1, fmt, args...);
  return out;
}

// 5 significant digits, no trailing zeros, no "-0".
std::string sig5(double v) {
  std::string s = printf_string("%.5g", v);
  if (s == "-0") s = "0";
  return s;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

constexpr std::size_t kLabelWidth = 8;
constexpr std::size_t kCellWidth = 23;

std::string cell_text(const std::optional<std::array<double, 3>>& cell) {
  if (!cell) return "";
  return printf_string("%.4f %.4f %.4f", (*cell)[0], (*cell)[1], (*cell)[2]);
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json report_json(const Report& report) {
  json stages = json::array();
  for (const auto& snap : report.snapshots) {
    json systems = json::array();
    for (const auto& sys : snap.systems) {
      json entry{{"label", sys.label}, {"dim", sys.state.dim()}, {"state", matrix_json(sys.state.matrix())}};
      if (sys.qubit) {
        const auto& q = *sys.qubit;
        entry["bloch"] = {{"vector", q.bloch_vector},
                          {"r", q.bloch.r},
                          {"theta_deg", q.bloch.theta_deg},
                          {"polar_deg", q.bloch.polar_deg},
                          {"phi_deg", q.bloch.phi_deg}};
        entry["probabilities"] = q.probabilities;
      }
      systems.push_back(std::move(entry));
    }
    json sums = json::array();
    for (const auto& p : snap.pair_sums) {
      sums.push_back({{"interaction", p.interaction}, {"pair", json::array({p.first, p.second})},
                      {"sums", p.sums}});
    }
    stages.push_back({{"stage", snap.stage},
                      {"name", stage_name(snap.stage)},
                      {"systems", std::move(systems)},
                      {"pair_sums", std::move(sums)}});
  }
  return {{"policy", std::string(to_string(report.policy))},
          {"integrator", std::string(to_string(report.integrator))},
          {"peak_dim", report.peak_dim},
          {"estimated_flops", report.estimated_flops},
          {"max_trace_deviation", report.max_trace_deviation},
          {"stages", std::move(stages)}};
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "table") return ReportFormat::table;
  if (text == "table-csv") return ReportFormat::table_csv;
  if (text == "structured") return ReportFormat::structured;
  if (text == "plotdata") return ReportFormat::plotdata;
  throw ScenarioError("unknown format '" + std::string(text) +
                      "' (expected one of table, table-csv, structured, plotdata)");
}

std::string format_bloch_line(std::string_view label, const BlochParams& bloch) {
  return std::string(label) + ": r=" + sig5(bloch.r) + " theta=" + sig5(bloch.theta_deg) +
         " phi=" + sig5(bloch.phi_deg);
}

std::string render_table(const Report& report) {
  const ProbabilityTable table = snapshot_report(report);
  std::ostringstream out;
  out << "Probability of the positive eigenstate (policy " << to_string(report.policy)
      << ", integrator " << to_string(report.integrator) << ")\n";

  std::string header = pad("", kLabelWidth);
  std::string axes = pad("qubit", kLabelWidth);
  for (const auto& name : table.stage_names) {
    header += "| " + pad(name, kCellWidth);
    axes += "| " + pad("P_x    P_y    P_z", kCellWidth);
  }
  auto emit = [&out](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  };
  emit(header);
  emit(axes);
  for (const auto& row : table.rows) {
    std::string line = pad(row.label, kLabelWidth);
    for (const auto& cell : row.cells) line += "| " + pad(cell_text(cell), kCellWidth);
    emit(line);
  }

  out << "\nBloch parameters (" << stage_name(report.final_snapshot().stage) << ")\n";
  for (const auto& sys : report.final_snapshot().systems) {
    if (sys.qubit) out << format_bloch_line(sys.label, sys.qubit->bloch) << "\n";
  }
  return out.str();
}

std::string render_table_csv(const Report& report) {
  std::string out = "qubit,stage,px,py,pz\n";
  for (const auto& snap : report.snapshots) {
    for (const auto& sys : snap.systems) {
      if (!sys.qubit) continue;
      const auto& p = sys.qubit->probabilities;
      out += sys.label + "," + std::to_string(snap.stage) + "," +
             printf_string("%.4f,%.4f,%.4f\n", clamp_probability(p[0]), clamp_probability(p[1]),
                           clamp_probability(p[2]));
    }
  }
  return out;
}

std::string render_structured(std::span<const Report> reports) {
  json list = json::array();
  for (const auto& r : reports) list.push_back(report_json(r));
  return json{{"reports", std::move(list)}}.dump(2) + "\n";
}

std::string render_plotdata(const Report& report) {
  std::string out = "qubit,stage,vx,vy,vz,r,theta_deg,phi_deg\n";
  const Snapshot* ends[] = {&report.snapshots.front(), &report.final_snapshot()};
  const char* names[] = {"initial", "final"};
  for (std::size_t k = 0; k < 2; ++k) {
    for (const auto& sys : ends[k]->systems) {
      if (!sys.qubit) continue;
      const auto& q = *sys.qubit;
      out += sys.label + "," + names[k] +
             printf_string(",%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", q.bloch_vector[0],
                           q.bloch_vector[1], q.bloch_vector[2], q.bloch.r, q.bloch.theta_deg,
                           q.bloch.phi_deg);
    }
  }
  return out;
}

std::string render_reports(std::span<const Report> reports, ReportFormat format) {
  if (format == ReportFormat::structured) return render_structured(reports);
  std::string out;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    if (k > 0) out += "\n";
    switch (format) {
      case ReportFormat::table:
        out += render_table(reports[k]);
        break;
      case ReportFormat::table_csv:
        out += render_table_csv(reports[k]);
        break;
      case ReportFormat::plotdata:
        out += render_plotdata(reports[k]);
        break;
      case ReportFormat::structured:
        break;
    }
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot write output file '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw OutputError("failed while writing output file '" + path.string() + "'");
}

std::string render_bench(std::span<const BenchRecord> records) {
  std::string out = printf_string("%-4s %-8s %12s %10s %14s %12s  %s\n", "N", "policy", "median_s",
                                  "peak_dim", "est_flops", "dev_vs_min", "runs_s");
  for (const auto& r : records) {
    if (r.skipped) {
      out += printf_string("%-4zu %-8s skipped: %s\n", r.n_incident,
                           std::string(to_string(r.policy)).c_str(), r.skip_reason.c_str());
      continue;
    }
    std::string runs;
    for (double t : r.wall_time_runs) runs += (runs.empty() ? "" : " ") + printf_string("%.6f", t);
    out += printf_string("%-4zu %-8s %12.6f %10zu %14.6g %12.3g  %s\n", r.n_incident,
                         std::string(to_string(r.policy)).c_str(), r.wall_time_median, r.peak_dim,
                         r.estimated_flops, r.deviation_vs_minimal, runs.c_str());
  }
  return out;
}

}  // namespace pairchain
