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

#include "pairchain/evolution.hpp"

#include <cmath>
#include <string>

#include "pairchain/errors.hpp"

namespace pairchain {
namespace {

void check_generator(const DensityMatrix& rho, const ComplexMatrix& h) {
  if (h.dim() != rho.dim()) {
    throw DimensionError("evolution: Hamiltonian dimension " + std::to_string(h.dim()) +
                         " vs state dimension " + std::to_string(rho.dim()));
  }
  const double asym = hermiticity_defect(h);
  if (asym > kHermitianTol) {
    throw NotHermitianError(
        "evolution: Hamiltonian is not Hermitian (max asymmetry " + std::to_string(asym) + ")",
        asym);
  }
}

}  // namespace

EulerStepper::EulerStepper(const ComplexMatrix& h, double dt)
    : h_(h), dt_(dt), rho_h_(h.dim()), h_rho_(h.dim()) {}

void EulerStepper::step(ComplexMatrix& rho) {
  mat_mul_into(rho, h_, rho_h_);
  mat_mul_into(h_, rho, h_rho_);
  auto out = rho.entries();
  const auto a = rho_h_.entries();
  const auto b = h_rho_.entries();
  // i dt (a - b) added component-wise.
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Complex d = a[k] - b[k];
    out[k] += Complex(-dt_ * d.imag(), dt_ * d.real());
  }
}

DensityMatrix euler_step(const DensityMatrix& rho, const ComplexMatrix& h, double dt) {
  check_generator(rho, h);
  DensityMatrix next = rho;
  EulerStepper(h, dt).step(next.matrix());
  return next;
}

DensityMatrix evolve_euler(const DensityMatrix& rho, const ComplexMatrix& h,
                           const EvolutionParams& params, const StepObserver& observer) {
  check_generator(rho, h);
  if (!(params.dt > 0.0) || !std::isfinite(params.dt)) {
    throw ScenarioError("evolution: time step must be positive and finite, got " +
                        std::to_string(params.dt));
  }
  DensityMatrix state = rho;
  EulerStepper stepper(h, params.dt);
  for (std::size_t n = 1; n <= params.steps; ++n) {
    stepper.step(state.matrix());
    if (observer) observer(n, state);
  }
  return state;
}

DensityMatrix evolve_exact(const DensityMatrix& rho, const ComplexMatrix& h, double t) {
  check_generator(rho, h);
  const ComplexMatrix u = unitary_propagator(h, t);
  return DensityMatrix(mat_mul(mat_mul(u, rho.matrix()), adjoint(u)), rho.layout());
}

}  // namespace pairchain
