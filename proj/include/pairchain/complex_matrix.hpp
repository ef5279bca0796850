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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pairchain {

using Complex = std::complex<double>;

/// Largest matrix dimension produced by kron/compose unless overridden.
inline constexpr std::size_t kDefaultMaxDim = 4096;
/// Default tolerance for "is this operator Hermitian".
inline constexpr double kHermitianTol = 1e-9;

/// Dense square matrix of complex doubles, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);
  /// Takes ownership of row-major entries; entries.size() must equal dim*dim.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> values);
  /// Builds from nested rows; every row must have as many entries as there are rows.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  std::span<Complex> entries() noexcept { return data_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale) noexcept;

  bool all_finite() const noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

/// Matrix product a*b. Throws DimensionError when the dims differ.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Writes a*b into `out`, resizing it if needed. `out` must not alias a or b.
void mat_mul_into(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out);

/// Kronecker product; block (i,j) of the result is a(i,j)*b.
/// Throws CapacityError when a.dim()*b.dim() exceeds max_dim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t max_dim = kDefaultMaxDim);

Complex trace(const ComplexMatrix& a) noexcept;

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// max |a(i,j) - b(i,j)|. Throws DimensionError when the dims differ.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |a(i,j) - conj(a(j,i))|.
double hermiticity_defect(const ComplexMatrix& a) noexcept;

/// a*b - b*a.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Column k is the unit eigenvector for eigenvalues[k].
  ComplexMatrix eigenvectors;
};

struct EigenOptions {
  double hermitian_tol = kHermitianTol;
  int max_sweeps = 100;
  /// Convergence threshold on the off-diagonal Frobenius norm, relative to
  /// max(1, ||h||_F).
  double off_diagonal_tol = 1e-12;
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Throws NotHermitianError (carrying the max asymmetry) when
/// max|h - h^dagger| exceeds options.hermitian_tol, and ConvergenceError when
/// the off-diagonal norm is still above threshold after max_sweeps sweeps.
/// Only the Hermitian part (h + h^dagger)/2 is diagonalised.
EigenDecomposition hermitian_eig(const ComplexMatrix& h, const EigenOptions& options = {});

/// exp(-i h t) for Hermitian h, assembled as V diag(exp(-i lambda_k t)) V^dagger.
ComplexMatrix unitary_propagator(const ComplexMatrix& h, double t);

}  // namespace pairchain
