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

#include <span>
#include <string>
#include <vector>

#include "pairchain/complex_matrix.hpp"
#include "pairchain/density_matrix.hpp"

namespace pairchain {

/// Standard 2x2 Pauli matrix.
ComplexMatrix pauli_matrix(Axis axis);

enum class CouplingKind { heisenberg, custom };

/// A two-body term between two named sites.
struct PairCoupling {
  std::string site_i;
  std::string site_j;
  /// Overall multiplier applied to the pair operator.
  double coupling = 1.0;
  CouplingKind kind = CouplingKind::heisenberg;
  /// Operator on the (site_i, site_j) product space, site_i as the leading
  /// factor. Used only when kind == custom.
  ComplexMatrix custom;

  friend bool operator==(const PairCoupling&, const PairCoupling&) = default;
};

/// coupling * (sx(x)sx + sy(x)sy + sz(x)sz) on two qubits.
ComplexMatrix heisenberg_pair(double coupling = 1.0);

/// Places `op`, an operator on the (site_i, site_j) product space, into the
/// full layout with identity on every other factor. Sites may sit anywhere in
/// the layout and in either order.
ComplexMatrix embed_two_site(const SubsystemLayout& layout, const std::string& site_i,
                             const std::string& site_j, const ComplexMatrix& op);

/// The pair operator of `pair` (Heisenberg or custom, times coupling) on the
/// full layout. Throws LayoutError for unknown or coincident sites,
/// DimensionError when a Heisenberg site is not a qubit or a custom matrix
/// does not match the pair dims, NotHermitianError for a non-Hermitian custom
/// matrix.
ComplexMatrix heisenberg_embedded(const SubsystemLayout& layout, const PairCoupling& pair);

/// h_a (x) I over the factors that follow `acting_on`, which must be a
/// contiguous prefix of the layout whose dims multiply to h_a.dim().
ComplexMatrix embed_noninteracting(const ComplexMatrix& h_a, const SubsystemLayout& layout,
                                   std::span<const std::string> acting_on);

/// `op` on a single site, identity elsewhere.
ComplexMatrix embed_single_site(const SubsystemLayout& layout, const std::string& site,
                                const ComplexMatrix& op);

}  // namespace pairchain
