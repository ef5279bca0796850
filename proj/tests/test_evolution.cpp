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

#include <cmath>
#include <numbers>

#include "pairchain/errors.hpp"
#include "pairchain/evolution.hpp"
#include "pairchain/hamiltonians.hpp"
#include "support/test_support.hpp"

using namespace pairchain;
using namespace pairchain::testing;

namespace {

const Complex I{0.0, 1.0};

DensityMatrix compose(std::initializer_list<DensityMatrix> parts) {
  const std::vector<DensityMatrix> v(parts);
  return tensor_compose(v);
}

std::array<double, 3> probs(const DensityMatrix& q) {
  return {measure_prob(q, Axis::x), measure_prob(q, Axis::y), measure_prob(q, Axis::z)};
}

}  // namespace

TEST_SUITE("evolution") {
  TEST_CASE("H = 0 leaves the state untouched") {
    Rng rng(301);
    const auto rho = random_state("q", 3, rng);
    CHECK(evolve_euler(rho, ComplexMatrix(3), {1e-3, 100}) == rho);
    CHECK(max_abs_diff(evolve_exact(rho, ComplexMatrix(3), 2.0).matrix(), rho.matrix()) <= 1e-14);
  }

  TEST_CASE("one Euler step by hand") {
    const auto rho = pauli_eigenstate(Axis::x, true);
    const auto h = pauli_matrix(Axis::z);
    const double dt = 0.1;
    // rho H - H rho = [[0, -1], [1, 0]], so rho' = rho + i dt [[0,-1],[1,0]].
    const auto expected = rho.matrix() + (I * dt) * ComplexMatrix::from_rows({{0.0, -1.0}, {1.0, 0.0}});
    CHECK(max_abs_diff(euler_step(rho, h, dt).matrix(), expected) == 0.0);
  }

  TEST_CASE("Euler keeps trace and Hermiticity at rounding level") {
    Rng rng(303);
    const DensityMatrix rho(random_density_matrix(8, rng), SubsystemLayout({"A", "B", "C"}, {2, 2, 2}));
    const auto h = random_hermitian(8, rng);
    double worst_trace = 0.0;
    double worst_herm = 0.0;
    evolve_euler(rho, h, {1e-3, 200}, [&](std::size_t, const DensityMatrix& r) {
      worst_trace = std::max(worst_trace, std::abs(trace(r.matrix()) - 1.0));
      worst_herm = std::max(worst_herm, hermiticity_defect(r.matrix()));
    });
    CHECK(worst_trace <= 1e-13);
    CHECK(worst_herm == 0.0);
  }

  TEST_CASE("observer sees every step and steps = 0 is the identity") {
    const auto rho = pauli_eigenstate(Axis::y, true);
    std::size_t calls = 0, last = 0;
    evolve_euler(rho, pauli_matrix(Axis::x), {1e-2, 7}, [&](std::size_t k, const DensityMatrix&) {
      ++calls;
      last = k;
    });
    CHECK(calls == 7);
    CHECK(last == 7);
    CHECK(evolve_euler(rho, pauli_matrix(Axis::x), {1e-2, 0}) == rho);
  }

  TEST_CASE("argument errors") {
    const auto rho = pauli_eigenstate(Axis::y, true);
    CHECK_THROWS_AS((void)euler_step(rho, ComplexMatrix(4), 0.1), DimensionError);
    auto bad = ComplexMatrix(2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS((void)euler_step(rho, bad, 0.1), NotHermitianError);
    CHECK_THROWS_AS((void)evolve_euler(rho, pauli_matrix(Axis::x), {0.0, 5}), ScenarioError);
    CHECK_THROWS_AS((void)evolve_euler(rho, pauli_matrix(Axis::x), {-1e-3, 5}), ScenarioError);
    CHECK_THROWS_AS((void)evolve_euler(rho, pauli_matrix(Axis::x), {std::nan(""), 5}), ScenarioError);
  }

  TEST_CASE("first interaction of the reference chain reproduces the tabulated probabilities") {
    const auto ab = compose({pauli_eigenstate(Axis::x, true, "A"), pauli_eigenstate(Axis::y, true, "B")});
    const auto out = evolve_euler(ab, heisenberg_pair(), {1e-4, 500});
    const auto pa = probs(partial_trace(out, {"A"}));
    const auto pb = probs(partial_trace(out, {"B"}));
    const double want_a[] = {0.9950, 0.5050, 0.4503};
    const double want_b[] = {0.5050, 0.9950, 0.5497};
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(pa[k] - want_a[k]) <= 1e-3);
      CHECK(std::abs(pb[k] - want_b[k]) <= 1e-3);
    }
  }

  TEST_CASE("Euler is first order: halving dt halves the error") {
    const auto ab = compose({pauli_eigenstate(Axis::x, true, "A"), pauli_eigenstate(Axis::y, true, "B")});
    const auto h = heisenberg_pair();
    const double t = 0.05;
    const auto exact = evolve_exact(ab, h, t).matrix();
    const auto coarse = evolve_euler(ab, h, {1e-4, 500}).matrix();
    const auto fine = evolve_euler(ab, h, {5e-5, 1000}).matrix();
    const double ratio = max_abs_diff(coarse, exact) / max_abs_diff(fine, exact);
    CHECK(ratio >= 1.8);
    CHECK(ratio <= 2.2);
  }

  TEST_CASE("exact evolution preserves purity and maps the singlet to itself") {
    Rng rng(305);
    const DensityMatrix pure(random_pure_matrix(4, rng), SubsystemLayout({"A", "B"}, {2, 2}));
    const auto out = evolve_exact(pure, random_hermitian(4, rng), 1.3);
    CHECK(std::abs(trace(mat_mul(out.matrix(), out.matrix())) - 1.0) <= 1e-12);

    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix singlet(4);
    const Complex v[] = {0.0, r, -r, 0.0};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) singlet(i, j) = v[i] * std::conj(v[j]);
    const DensityMatrix s(singlet, SubsystemLayout({"A", "B"}, {2, 2}));
    CHECK(max_abs_diff(evolve_exact(s, heisenberg_pair(), 0.9).matrix(), singlet) <= 1e-12);
  }

  TEST_CASE("Heisenberg evolution for t = pi/4 swaps a product state") {
    Rng rng(307);
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_state("A", 2, rng);
      const auto b = random_state("B", 2, rng);
      const auto out = evolve_exact(compose({a, b}), heisenberg_pair(), std::numbers::pi / 4);
      CHECK(max_abs_diff(partial_trace(out, {"A"}).matrix(), b.matrix()) <= 1e-10);
      CHECK(max_abs_diff(partial_trace(out, {"B"}).matrix(), a.matrix()) <= 1e-10);
    }
  }

  TEST_CASE("a spectator factor does not change the reduced dynamics") {
    // Evolving (A,B) inside (A,B,C) with H (x) I_C and tracing C out agrees
    // with evolving (A,B) alone; C is left unchanged. Holds for every step.
    Rng rng(309);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t dc = 2 + trial % 3;
      const auto a = random_state("A", 2, rng);
      const auto b = random_state("B", 2, rng);
      const auto c = random_state("C", dc, rng);
      const auto h = random_hermitian(4, rng);
      const auto big = compose({a, b, c});
      const SubsystemLayout& l = big.layout();
      const std::string ab[] = {"A", "B"};
      const auto h_big = embed_noninteracting(h, l, ab);

      EulerStepper small_step(h, 1e-3);
      EulerStepper big_step(h_big, 1e-3);
      auto small_rho = compose({a, b}).matrix();
      auto big_rho = big.matrix();
      double worst = 0.0, worst_c = 0.0;
      for (int k = 0; k < 50; ++k) {
        small_step.step(small_rho);
        big_step.step(big_rho);
        const DensityMatrix cur(big_rho, l);
        worst = std::max(worst, max_abs_diff(partial_trace(cur, {"A", "B"}).matrix(), small_rho));
        worst_c = std::max(worst_c, max_abs_diff(partial_trace(cur, {"C"}).matrix(), c.matrix()));
      }
      CHECK(worst <= 1e-12);
      CHECK(worst_c <= 1e-12);
    }
  }

  TEST_CASE("conserved quantities under the pair coupling") {
    Rng rng(311);
    const auto rho = compose({random_state("A", 2, rng), random_state("B", 2, rng)});
    const auto h = heisenberg_pair();
    const auto out = evolve_euler(rho, h, {1e-4, 500});
    for (Axis a : kAxes) {
      const auto s = pauli_matrix(a);
      const auto total = kron(s, ComplexMatrix::identity(2)) + kron(ComplexMatrix::identity(2), s);
      const double before = trace(mat_mul(rho.matrix(), total)).real();
      const double after = trace(mat_mul(out.matrix(), total)).real();
      CHECK(std::abs(before - after) <= 1e-13);
    }
    const double e0 = trace(mat_mul(rho.matrix(), h)).real();
    const double e1 = trace(mat_mul(out.matrix(), h)).real();
    CHECK(std::abs(e0 - e1) <= 1e-13);
  }

  TEST_CASE("EulerStepper matches euler_step") {
    Rng rng(313);
    const auto rho = random_state("q", 4, rng);
    const auto h = random_hermitian(4, rng);
    EulerStepper stepper(h, 2e-3);
    auto m = rho.matrix();
    DensityMatrix ref = rho;
    for (int k = 0; k < 5; ++k) {
      stepper.step(m);
      ref = euler_step(ref, h, 2e-3);
    }
    CHECK(m == ref.matrix());
  }
}
