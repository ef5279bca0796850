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

#include "pairchain/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pairchain/errors.hpp"

namespace pairchain {
namespace {

// Plain complex product, no Annex G NaN recovery. conj(a)*conj(b) == conj(a*b) exactly.
inline Complex mul(Complex a, Complex b) noexcept {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw DimensionError("ComplexMatrix: " + std::to_string(data_.size()) +
                         " entries cannot form a " + std::to_string(dim_) + "x" +
                         std::to_string(dim_) + " matrix");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw DimensionError("ComplexMatrix::from_rows: row of length " +
                           std::to_string(row.size()) + " in a " + std::to_string(n) +
                           "-row matrix");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) noexcept {
  for (auto& z : data_) z = mul(z, scale);
  return *this;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }

void mat_mul_into(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
  require_same_dim(a, b, "mat_mul");
  const std::size_t n = a.dim();
  if (out.dim() != n) out = ComplexMatrix(n);

  // Split-complex i-k-j loop: the inner loop runs over contiguous rows of b
  // and out, and sums accumulate in k order for every entry.
  const Complex* pa = a.entries().data();
  const Complex* pb = b.entries().data();
  Complex* po = out.entries().data();
  std::vector<double> acc_re(n), acc_im(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc_re.begin(), acc_re.end(), 0.0);
    std::fill(acc_im.begin(), acc_im.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = pa[i * n + k].real();
      const double ai = pa[i * n + k].imag();
      const double* brow = reinterpret_cast<const double*>(pb + k * n);
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        acc_re[j] += ar * br - ai * bi;
        acc_im[j] += ar * bi + ai * br;
      }
    }
    for (std::size_t j = 0; j < n; ++j) po[i * n + j] = {acc_re[j], acc_im[j]};
  }
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out;
  mat_mul_into(a, b, out);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_dim) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  if (na != 0 && nb > max_dim / na) {
    throw CapacityError("kron: result dimension " + std::to_string(na) + "*" +
                        std::to_string(nb) + " exceeds the cap of " + std::to_string(max_dim));
  }
  const std::size_t n = na * nb;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) {
          out(i * nb + k, j * nb + l) = mul(aij, b(k, l));
        }
      }
    }
  }
  return out;
}

Complex trace(const ComplexMatrix& a) noexcept {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

double hermiticity_defect(const ComplexMatrix& a) noexcept {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return worst;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return mat_mul(a, b) - mat_mul(b, a);
}

EigenDecomposition hermitian_eig(const ComplexMatrix& h, const EigenOptions& options) {
  const double asym = hermiticity_defect(h);
  if (asym > options.hermitian_tol) {
    throw NotHermitianError("hermitian_eig: input is not Hermitian (max asymmetry " +
                                std::to_string(asym) + ")",
                            asym);
  }
  const std::size_t n = h.dim();
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  double frob2 = 0.0;
  for (Complex z : a.entries()) frob2 += std::norm(z);
  const double threshold = options.off_diagonal_tol * std::max(1.0, std::sqrt(frob2));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * std::norm(a(p, q));
    }
    return std::sqrt(s);
  };

  bool converged = off_norm() <= threshold;
  for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double m = std::abs(b);
        if (m == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Negligible against both diagonal entries: drop it outright.
        if (sweep > 3 && std::abs(app) + 100.0 * m == std::abs(app) &&
            std::abs(aqq) + 100.0 * m == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        // Phase e = b/|b| rotates the pair block to a real symmetric one, then a
        // real Jacobi rotation (c, s) annihilates it. Combined rotation R:
        //   R_pp = c, R_pq = s, R_qp = -s conj(e), R_qq = c conj(e).
        const Complex e = b / m;
        const double theta = (aqq - app) / (2.0 * m);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex ce = std::conj(e);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * mul(ce, akq);
          a(k, q) = s * akp + c * mul(ce, akq);
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * mul(e, aqk);
          a(q, k) = s * apk + c * mul(e, aqk);
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * mul(ce, vkq);
          v(k, q) = s * vkp + c * mul(ce, vkq);
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
    converged = off_norm() <= threshold;
  }
  if (!converged) {
    throw ConvergenceError("hermitian_eig: no convergence after " +
                           std::to_string(options.max_sweeps) + " sweeps (off-diagonal norm " +
                           std::to_string(off_norm()) + ")");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition result;
  result.eigenvalues.resize(n);
  result.eigenvectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    result.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t row = 0; row < n; ++row) result.eigenvectors(row, k) = v(row, order[k]);
  }
  return result;
}

ComplexMatrix unitary_propagator(const ComplexMatrix& h, double t) {
  const EigenDecomposition eig = hermitian_eig(h);
  const std::size_t n = h.dim();
  // V * diag(phase) folded into the columns of V, then times V^dagger.
  ComplexMatrix scaled = eig.eigenvectors;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::polar(1.0, -eig.eigenvalues[k] * t);
    for (std::size_t row = 0; row < n; ++row) scaled(row, k) = mul(scaled(row, k), phase);
  }
  return mat_mul(scaled, adjoint(eig.eigenvectors));
}

}  // namespace pairchain
