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

#include "pairchain/cli.hpp"

#include <cstdio>
#include <optional>
#include <vector>

#include <CLI11.hpp>

#include "pairchain/bench.hpp"
#include "pairchain/chain.hpp"
#include "pairchain/errors.hpp"
#include "pairchain/report_io.hpp"
#include "pairchain/scenario_io.hpp"

namespace pairchain {
namespace {

struct OutputOptions {
  std::string policy;
  std::string integrator;
  std::string format = "table";
  std::string out_path;
};

struct BenchOptions {
  std::string file;
  std::string incident;
  std::size_t repeats = 3;
  std::size_t warmup = 1;
  std::optional<std::size_t> steps;
};

std::string deviation_line(const PolicyComparison& cmp) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "max policy deviation: %.3e (states %.3e, probabilities %.3e)",
                cmp.max_deviation(), cmp.max_state_deviation, cmp.max_probability_deviation);
  return buf;
}

// Exit code 4 when any final reduced state fails the density checks.
int check_final_states(std::span<const Report> reports, std::ostream& err) {
  int code = kExitOk;
  for (const auto& report : reports) {
    for (const auto& sys : report.final_snapshot().systems) {
      const auto d = validate_density(sys.state);
      if (!d.ok()) {
        err << "numerical failure (" << to_string(report.policy) << "): state of '" << sys.label
            << "' has trace deviation " << d.trace_deviation << ", Hermiticity defect "
            << d.hermiticity_defect << ", minimum eigenvalue " << d.min_eigenvalue << "\n";
        code = kExitNumerical;
      }
    }
  }
  return code;
}

int emit_runs(Scenario scenario, const OutputOptions& opts, std::ostream& out, std::ostream& err) {
  if (!opts.policy.empty()) scenario.policy = parse_policy_choice(opts.policy);
  if (!opts.integrator.empty()) scenario.integrator = parse_integrator(opts.integrator);
  const ReportFormat format = parse_report_format(opts.format);

  std::vector<Report> reports;
  std::optional<PolicyComparison> cmp;
  if (scenario.policy == PolicyChoice::all) {
    cmp = compare_policies(scenario);
    reports = cmp->reports;
  } else {
    reports.push_back(run_chain(scenario, static_cast<Policy>(scenario.policy)));
  }

  if (const int code = check_final_states(reports, err); code != kExitOk) return code;

  std::string rendered = render_reports(reports, format);
  const bool human = format == ReportFormat::table;
  if (human && cmp) rendered += "\n" + deviation_line(*cmp) + "\n";
  if (!opts.out_path.empty()) {
    write_text_file(opts.out_path, rendered);
    if (!human) {
      out << render_table(reports.back());
      if (cmp) out << "\n" << deviation_line(*cmp) << "\n";
    } else {
      out << rendered;
    }
  } else {
    out << rendered;
  }
  if (cmp && cmp->max_deviation() > kCompareTolerance) return kExitComparisonFailed;
  return kExitOk;
}

int run_compare(const std::string& file, const std::string& integrator, std::ostream& out) {
  Scenario scenario = load_scenario_file(file);
  if (!integrator.empty()) scenario.integrator = parse_integrator(integrator);
  const PolicyComparison cmp = compare_policies(scenario);
  out << deviation_line(cmp) << "\n";
  if (cmp.max_deviation() > kCompareTolerance) {
    out << "policies disagree beyond " << kCompareTolerance << "\n";
    return kExitComparisonFailed;
  }
  return kExitOk;
}

std::pair<std::size_t, std::size_t> parse_incident_range(const std::string& text) {
  auto to_count = [&](const std::string& s) {
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) {
      throw std::invalid_argument("--incident expects N or LO:HI, got '" + text + "'");
    }
    return static_cast<std::size_t>(value);
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const std::size_t n = to_count(text);
    return {n, n};
  }
  const std::size_t lo = to_count(text.substr(0, colon));
  const std::size_t hi = to_count(text.substr(colon + 1));
  if (lo > hi) throw std::invalid_argument("--incident range is empty: '" + text + "'");
  return {lo, hi};
}

int run_bench(const BenchOptions& opts, std::ostream& out) {
  if (opts.file.empty() == opts.incident.empty()) {
    throw std::invalid_argument("bench needs either a scenario file or --incident, not both");
  }
  std::vector<BenchRecord> records;
  if (!opts.incident.empty()) {
    ScalingTemplate base;
    base.repeats = opts.repeats;
    base.warmup = opts.warmup;
    if (opts.steps) base.params.steps = *opts.steps;
    const auto [lo, hi] = parse_incident_range(opts.incident);
    records = scaling_suite(base, lo, hi);
  } else {
    Scenario scenario = load_scenario_file(opts.file);
    if (opts.steps) {
      for (auto& it : scenario.interactions) it.params.steps = *opts.steps;
    }
    const Report reference = run_chain(scenario, Policy::minimal);
    for (Policy policy : kPolicies) {
      if (expected_peak_dim(scenario, policy) > scenario.max_dim) {
        BenchRecord skipped;
        skipped.policy = policy;
        skipped.n_incident = scenario.interactions.size();
        skipped.skipped = true;
        skipped.skip_reason = "composite dimension exceeds cap " + std::to_string(scenario.max_dim);
        records.push_back(std::move(skipped));
        continue;
      }
      BenchRecord record = time_policy(scenario, policy, opts.repeats, opts.warmup);
      record.deviation_vs_minimal =
          compare_reports(run_chain(scenario, policy), reference).max_deviation();
      records.push_back(std::move(record));
    }
  }
  out << render_bench(records);
  return kExitOk;
}

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--policy", opts.policy, "full, lazy, minimal or all");
  cmd->add_option("--format", opts.format, "table, table-csv, structured or plotdata");
  cmd->add_option("--out", opts.out_path, "write the rendered report to this path");
}

}  // namespace

int main_dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequential pairwise quantum interaction simulator", "pairchain"};
  app.require_subcommand(1);

  OutputOptions run_opts;
  std::string run_file;
  auto* run = app.add_subcommand("run", "run a scenario file under one or all policies");
  run->add_option("file", run_file, "scenario JSON file")->required();
  add_output_options(run, run_opts);
  run->add_option("--integrator", run_opts.integrator, "euler or exact");

  std::string compare_file;
  std::string compare_integrator;
  auto* compare = app.add_subcommand("compare", "run every policy and report their deviation");
  compare->add_option("file", compare_file, "scenario JSON file")->required();
  compare->add_option("--integrator", compare_integrator, "euler or exact");

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "time the policies on a file or a generated chain");
  bench->add_option("file", bench_opts.file, "scenario JSON file");
  bench->add_option("--incident", bench_opts.incident, "number of incident qubits, N or LO:HI");
  bench->add_option("--repeats", bench_opts.repeats, "timed repetitions (>= 3)");
  bench->add_option("--warmup", bench_opts.warmup, "discarded warm-up runs");
  bench->add_option("--steps", bench_opts.steps, "override Euler steps per interaction");

  OutputOptions demo_opts;
  auto* demo = app.add_subcommand("paper-demo", "run the built-in three-qubit example");
  add_output_options(demo, demo_opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) return emit_runs(load_scenario_file(run_file), run_opts, out, err);
    if (compare->parsed()) return run_compare(compare_file, compare_integrator, out);
    if (bench->parsed()) return run_bench(bench_opts, out);
    if (demo->parsed()) {
      Scenario scenario = reference_scenario();
      if (demo_opts.policy.empty()) demo_opts.policy = "all";
      if (demo_opts.policy == "all" && demo_opts.format == "table") {
        // One table (all three agree) plus the agreement line.
        const PolicyComparison cmp = compare_policies(scenario);
        if (const int code = check_final_states(cmp.reports, err); code != kExitOk) return code;
        const std::string text =
            render_table(cmp.reports.back()) + "\n" + deviation_line(cmp) + "\n";
        if (!demo_opts.out_path.empty()) write_text_file(demo_opts.out_path, text);
        out << text;
        return cmp.max_deviation() > kCompareTolerance ? kExitComparisonFailed : kExitOk;
      }
      return emit_runs(std::move(scenario), demo_opts, out, err);
    }
  } catch (const ScenarioError& e) {
    err << "scenario error: " << e.what() << "\n";
    return kExitScenario;
  } catch (const LayoutError& e) {
    err << "scenario error: " << e.what() << "\n";
    return kExitScenario;
  } catch (const CapacityError& e) {
    err << "scenario error: " << e.what() << "\n";
    return kExitScenario;
  } catch (const OutputError& e) {
    err << "output error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace pairchain
