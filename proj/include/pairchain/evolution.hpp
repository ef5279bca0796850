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

#include <cstddef>
#include <functional>

#include "pairchain/complex_matrix.hpp"
#include "pairchain/density_matrix.hpp"

namespace pairchain {

struct EvolutionParams {
  double dt = 1e-4;
  std::size_t steps = 500;

  double total_time() const noexcept { return dt * static_cast<double>(steps); }

  friend bool operator==(const EvolutionParams&, const EvolutionParams&) = default;
};

/// Called after every step with the 1-based step number and the new state.
using StepObserver = std::function<void(std::size_t step, const DensityMatrix& rho)>;

/// One explicit Euler step of d(rho)/dt = i (rho H - H rho):
///   rho' = rho + i dt (rho H - H rho).
/// Throws DimensionError on a size mismatch, NotHermitianError when h is not
/// Hermitian within kHermitianTol.
DensityMatrix euler_step(const DensityMatrix& rho, const ComplexMatrix& h, double dt);

/// params.steps Euler steps. Throws as euler_step, plus ScenarioError
/// for dt <= 0 (or non-finite).
DensityMatrix evolve_euler(const DensityMatrix& rho, const ComplexMatrix& h,
                           const EvolutionParams& params, const StepObserver& observer = {});

/// U rho U^dagger with U = exp(-i h t).
DensityMatrix evolve_exact(const DensityMatrix& rho, const ComplexMatrix& h, double t);

/// Reusable buffers for repeated Euler steps on one dimension.
class EulerStepper {
 public:
  EulerStepper(const ComplexMatrix& h, double dt);

  /// Advances `rho` in place by one step. rho.dim() must equal h.dim().
  void step(ComplexMatrix& rho);

 private:
  const ComplexMatrix& h_;
  double dt_;
  ComplexMatrix rho_h_;
  ComplexMatrix h_rho_;
};

}  // namespace pairchain
