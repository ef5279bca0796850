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

#include <ostream>
#include <span>
#include <string>

namespace pairchain {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitComparisonFailed = 1,
  kExitUsage = 2,
  kExitScenario = 3,
  kExitNumerical = 4,
};

/// Policies must agree to within this for `compare` to succeed.
inline constexpr double kCompareTolerance = 1e-9;

/// Entry point of the tool. `args` excludes the program name.
///
///   run <file> [--policy P|all] [--integrator euler|exact] [--out PATH] [--format F]
///   compare <file> [--integrator euler|exact]
///   bench [<file>] [--incident N|LO:HI] [--repeats R] [--warmup W] [--steps S]
///   paper-demo [--policy P|all] [--format F] [--out PATH]
int main_dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pairchain
