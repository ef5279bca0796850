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

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pairchain/complex_matrix.hpp"

namespace pairchain {

enum class Axis { x, y, z };

inline constexpr std::array<Axis, 3> kAxes = {Axis::x, Axis::y, Axis::z};

std::string_view to_string(Axis axis) noexcept;
/// Accepts "x", "y", "z". Throws LayoutError otherwise.
Axis parse_axis(std::string_view text);

/// Ordered tensor factors of a composite Hilbert space.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  /// Throws LayoutError on duplicate labels, zero dims, or length mismatch.
  SubsystemLayout(std::vector<std::string> labels, std::vector<std::size_t> dims);

  static SubsystemLayout single(std::string label, std::size_t dim);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t total_dim() const noexcept;

  bool contains(std::string_view label) const noexcept;
  /// Position of `label`; throws LayoutError for unknown labels.
  std::size_t index_of(std::string_view label) const;
  std::size_t dim_of(std::string_view label) const { return dims_[index_of(label)]; }

  /// Concatenation; throws LayoutError if the label sets overlap.
  SubsystemLayout concat(const SubsystemLayout& other) const;

  friend bool operator==(const SubsystemLayout&, const SubsystemLayout&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> dims_;
};

/// A density operator together with the layout of its tensor factors.
///
/// Construction checks only structure (matrix dim equals the layout's total
/// dim). Physical validity is reported by validate_density().
class DensityMatrix {
 public:
  DensityMatrix() = default;
  DensityMatrix(ComplexMatrix matrix, SubsystemLayout layout);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  ComplexMatrix& matrix() noexcept { return matrix_; }
  const SubsystemLayout& layout() const noexcept { return layout_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

  /// Same matrix under a new single-factor label. Requires one factor.
  DensityMatrix relabeled(std::string label) const;

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  ComplexMatrix matrix_;
  SubsystemLayout layout_;
};

/// Projector (I + sign * sigma_axis)/2 on a single qubit labelled `label`.
/// `positive` selects the +1 eigenstate.
DensityMatrix pauli_eigenstate(Axis axis, bool positive, std::string label = "q");

/// Kronecker product of the states in order; layouts concatenate.
/// Throws LayoutError for an empty list or duplicate labels, CapacityError
/// when the product dimension exceeds max_dim.
DensityMatrix tensor_compose(std::span<const DensityMatrix> states,
                             std::size_t max_dim = kDefaultMaxDim);

/// Sums out every factor not listed in `keep`. Kept factors retain their
/// original relative order regardless of the order of `keep`.
/// Throws LayoutError for an empty or unknown keep set.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::string> keep);

/// v_i = Re tr(rho sigma_i). Throws DimensionError unless rho is a single qubit.
std::array<double, 3> bloch_vector(const DensityMatrix& rho);

/// (I + v.sigma)/2.
ComplexMatrix qubit_from_bloch(const std::array<double, 3>& v);

struct BlochParams {
  /// |v|.
  double r = 0.0;
  /// arccos(v_z) in degrees, v_z clamped to [-1, 1]. Equals polar_deg for pure
  /// states and drifts from it as r drops below 1.
  double theta_deg = 0.0;
  /// Geometric polar angle arccos(v_z / r) of the Bloch direction, degrees.
  double polar_deg = 0.0;
  /// atan2(v_y, v_x) in degrees, in (-180, 180].
  double phi_deg = 0.0;
};

/// Bloch radius and angles of a single qubit. When r < 1e-12 all angles are 0;
/// when v_x^2 + v_y^2 < 1e-24, phi is 0.
BlochParams bloch_params(const DensityMatrix& rho);

/// tr(rho (I + sigma_axis)/2) = (1 + v_axis)/2, unclamped.
double measure_prob(const DensityMatrix& rho, Axis axis);

/// Clamps a probability to [0, 1] for display.
double clamp_probability(double p) noexcept;

/// Smallest eigenvalue allowed before a state counts as non-positive.
inline constexpr double kNegativityFloor = -1e-6;

struct DensityDiagnostics {
  double trace_deviation = 0.0;
  double hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool trace_ok = true;
  bool hermitian_ok = true;
  bool positive_ok = true;

  bool ok() const noexcept { return trace_ok && hermitian_ok && positive_ok; }
};

/// Checks |tr - 1| <= tol, max|rho - rho^dagger| <= tol and
/// min eigenvalue of the Hermitian part >= kNegativityFloor. Never throws on
/// non-physical input.
DensityDiagnostics validate_density(const DensityMatrix& rho, double tol = kHermitianTol);

}  // namespace pairchain
