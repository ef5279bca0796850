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
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "pairchain/bench.hpp"
#include "pairchain/chain.hpp"

namespace pairchain {

enum class ReportFormat {
  /// Probability table at 4 decimals plus Bloch lines at 5 significant digits.
  table,
  /// qubit,stage,px,py,pz
  table_csv,
  /// JSON at full precision, no timing fields.
  structured,
  /// Initial and final Bloch vectors per qubit, CSV.
  plotdata,
};

/// "table", "table-csv", "structured", "plotdata"; throws ScenarioError otherwise.
ReportFormat parse_report_format(std::string_view text);

/// "A: r=0.98913 theta=95.072 phi=6.3053"
std::string format_bloch_line(std::string_view label, const BlochParams& bloch);

std::string render_table(const Report& report);
std::string render_table_csv(const Report& report);
/// {"reports": [...]} for one or more reports of the same scenario.
std::string render_structured(std::span<const Report> reports);
std::string render_plotdata(const Report& report);

/// Renders `reports` in `format`. Text formats concatenate one block per report.
std::string render_reports(std::span<const Report> reports, ReportFormat format);

/// Writes `text` to `path`; throws OutputError when the path is not writable.
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Timing table for bench records (the only output that carries wall times).
std::string render_bench(std::span<const BenchRecord> records);

}  // namespace pairchain
