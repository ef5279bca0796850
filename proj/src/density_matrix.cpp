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

#include "pairchain/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_set>

#include "pairchain/errors.hpp"
#include "pairchain/hamiltonians.hpp"

namespace pairchain {
namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

void require_qubit(const DensityMatrix& rho, const char* op) {
  if (rho.layout().size() != 1 || rho.dim() != 2) {
    throw DimensionError(std::string(op) + ": expected a single qubit, got a " +
                         std::to_string(rho.layout().size()) + "-factor state of dimension " +
                         std::to_string(rho.dim()));
  }
}

}  // namespace

std::string_view to_string(Axis axis) noexcept {
  switch (axis) {
    case Axis::x:
      return "x";
    case Axis::y:
      return "y";
    case Axis::z:
      return "z";
  }
  return "?";
}

Axis parse_axis(std::string_view text) {
  if (text == "x") return Axis::x;
  if (text == "y") return Axis::y;
  if (text == "z") return Axis::z;
  throw LayoutError("unknown axis '" + std::string(text) + "' (expected one of x, y, z)");
}

SubsystemLayout::SubsystemLayout(std::vector<std::string> labels, std::vector<std::size_t> dims)
    : labels_(std::move(labels)), dims_(std::move(dims)) {
  if (labels_.size() != dims_.size()) {
    throw LayoutError("layout: " + std::to_string(labels_.size()) + " labels but " +
                      std::to_string(dims_.size()) + " dims");
  }
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!seen.insert(labels_[i]).second) {
      throw LayoutError("layout: duplicate label '" + labels_[i] + "'");
    }
    if (dims_[i] == 0) throw LayoutError("layout: factor '" + labels_[i] + "' has dimension 0");
  }
}

SubsystemLayout SubsystemLayout::single(std::string label, std::size_t dim) {
  return SubsystemLayout({std::move(label)}, {dim});
}

std::size_t SubsystemLayout::total_dim() const noexcept {
  std::size_t total = 1;
  for (std::size_t d : dims_) total *= d;
  return total;
}

bool SubsystemLayout::contains(std::string_view label) const noexcept {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t SubsystemLayout::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw LayoutError("unknown subsystem label '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout& other) const {
  auto labels = labels_;
  auto dims = dims_;
  labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
  dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
  return SubsystemLayout(std::move(labels), std::move(dims));
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, SubsystemLayout layout)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
  if (matrix_.dim() != layout_.total_dim()) {
    throw DimensionError("density matrix of dimension " + std::to_string(matrix_.dim()) +
                         " does not match layout dimension " +
                         std::to_string(layout_.total_dim()));
  }
}

DensityMatrix DensityMatrix::relabeled(std::string label) const {
  if (layout_.size() != 1) throw LayoutError("relabeled: state has more than one factor");
  return DensityMatrix(matrix_, SubsystemLayout::single(std::move(label), matrix_.dim()));
}

DensityMatrix pauli_eigenstate(Axis axis, bool positive, std::string label) {
  ComplexMatrix m = pauli_matrix(axis);
  m *= positive ? 0.5 : -0.5;
  m(0, 0) += 0.5;
  m(1, 1) += 0.5;
  return DensityMatrix(std::move(m), SubsystemLayout::single(std::move(label), 2));
}

DensityMatrix tensor_compose(std::span<const DensityMatrix> states, std::size_t max_dim) {
  if (states.empty()) throw LayoutError("tensor_compose: no states given");
  SubsystemLayout layout = states.front().layout();
  ComplexMatrix matrix = states.front().matrix();
  for (const auto& next : states.subspan(1)) {
    layout = layout.concat(next.layout());
    matrix = kron(matrix, next.matrix(), max_dim);
  }
  return DensityMatrix(std::move(matrix), std::move(layout));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> keep) {
  const SubsystemLayout& layout = rho.layout();
  if (keep.empty()) throw LayoutError("partial_trace: keep set is empty");
  std::vector<bool> kept(layout.size(), false);
  for (const auto& label : keep) kept[layout.index_of(label)] = true;

  // Row-major strides of each factor in the full index.
  const std::size_t nf = layout.size();
  std::vector<std::size_t> stride(nf);
  std::size_t s = 1;
  for (std::size_t f = nf; f-- > 0;) {
    stride[f] = s;
    s *= layout.dims()[f];
  }

  // Offsets of every kept (resp. traced) multi-index within the full index,
  // enumerated with the last factor fastest.
  auto offsets_for = [&](bool want_kept) {
    std::vector<std::size_t> offsets{0};
    for (std::size_t f = 0; f < nf; ++f) {
      if (kept[f] != want_kept) continue;
      std::vector<std::size_t> next;
      next.reserve(offsets.size() * layout.dims()[f]);
      for (std::size_t base : offsets) {
        for (std::size_t digit = 0; digit < layout.dims()[f]; ++digit) {
          next.push_back(base + digit * stride[f]);
        }
      }
      offsets = std::move(next);
    }
    return offsets;
  };
  const auto kept_off = offsets_for(true);
  const auto traced_off = offsets_for(false);

  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  for (std::size_t f = 0; f < nf; ++f) {
    if (kept[f]) {
      labels.push_back(layout.labels()[f]);
      dims.push_back(layout.dims()[f]);
    }
  }

  const std::size_t nk = kept_off.size();
  ComplexMatrix out(nk);
  const ComplexMatrix& m = rho.matrix();
  for (std::size_t r = 0; r < nk; ++r) {
    for (std::size_t c = 0; c < nk; ++c) {
      Complex sum = 0.0;
      for (std::size_t t : traced_off) sum += m(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(out), SubsystemLayout(std::move(labels), std::move(dims)));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::string> keep) {
  return partial_trace(rho, std::span<const std::string>(keep.begin(), keep.size()));
}

std::array<double, 3> bloch_vector(const DensityMatrix& rho) {
  require_qubit(rho, "bloch_vector");
  const ComplexMatrix& m = rho.matrix();
  // Re tr(rho sigma) written out for each Pauli matrix.
  return {m(0, 1).real() + m(1, 0).real(), m(1, 0).imag() - m(0, 1).imag(),
          m(0, 0).real() - m(1, 1).real()};
}

ComplexMatrix qubit_from_bloch(const std::array<double, 3>& v) {
  return ComplexMatrix::from_rows({{0.5 * (1.0 + v[2]), Complex(0.5 * v[0], -0.5 * v[1])},
                                   {Complex(0.5 * v[0], 0.5 * v[1]), 0.5 * (1.0 - v[2])}});
}

BlochParams bloch_params(const DensityMatrix& rho) {
  const auto v = bloch_vector(rho);
  BlochParams out;
  out.r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (out.r < 1e-12) return out;
  out.theta_deg = std::acos(std::clamp(v[2], -1.0, 1.0)) * kRadToDeg;
  out.polar_deg = std::acos(std::clamp(v[2] / out.r, -1.0, 1.0)) * kRadToDeg;
  if (v[0] * v[0] + v[1] * v[1] >= 1e-24) out.phi_deg = std::atan2(v[1], v[0]) * kRadToDeg;
  if (out.phi_deg == -180.0) out.phi_deg = 180.0;
  return out;
}

double measure_prob(const DensityMatrix& rho, Axis axis) {
  const auto v = bloch_vector(rho);
  return 0.5 * (1.0 + v[static_cast<std::size_t>(axis)]);
}

double clamp_probability(double p) noexcept { return std::clamp(p, 0.0, 1.0); }

DensityDiagnostics validate_density(const DensityMatrix& rho, double tol) {
  DensityDiagnostics d;
  const ComplexMatrix& m = rho.matrix();
  d.trace_deviation = std::abs(trace(m) - 1.0);
  d.hermiticity_defect = hermiticity_defect(m);
  d.trace_ok = d.trace_deviation <= tol;
  d.hermitian_ok = d.hermiticity_defect <= tol;

  if (m.empty() || !m.all_finite()) {
    d.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    d.positive_ok = false;
    d.trace_ok = d.trace_ok && m.all_finite();
    return d;
  }
  EigenOptions opts;
  opts.hermitian_tol = std::numeric_limits<double>::infinity();
  try {
    d.min_eigenvalue = hermitian_eig(m, opts).eigenvalues.front();
    d.positive_ok = d.min_eigenvalue >= kNegativityFloor;
  } catch (const ConvergenceError&) {
    d.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    d.positive_ok = false;
  }
  return d;
}

}  // namespace pairchain
