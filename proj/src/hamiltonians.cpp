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

#include "pairchain/hamiltonians.hpp"

#include "pairchain/errors.hpp"

namespace pairchain {
namespace {

// Decomposes full-space indices into (local index over `sites`, index over the
// remaining factors). Both are row-major in the order given / layout order.
struct SiteSplit {
  std::vector<std::size_t> local;
  std::vector<std::size_t> rest;
};

SiteSplit split_indices(const SubsystemLayout& layout, std::span<const std::size_t> sites) {
  const std::size_t nf = layout.size();
  const auto& dims = layout.dims();
  std::vector<bool> is_site(nf, false);
  for (std::size_t s : sites) is_site[s] = true;

  const std::size_t total = layout.total_dim();
  SiteSplit split{std::vector<std::size_t>(total), std::vector<std::size_t>(total)};
  std::vector<std::size_t> digits(nf, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (std::size_t f = nf; f-- > 0;) {
      digits[f] = rem % dims[f];
      rem /= dims[f];
    }
    std::size_t local = 0;
    for (std::size_t s : sites) local = local * dims[s] + digits[s];
    std::size_t rest = 0;
    for (std::size_t f = 0; f < nf; ++f) {
      if (!is_site[f]) rest = rest * dims[f] + digits[f];
    }
    split.local[idx] = local;
    split.rest[idx] = rest;
  }
  return split;
}

ComplexMatrix embed_on_sites(const SubsystemLayout& layout, std::span<const std::size_t> sites,
                             const ComplexMatrix& op) {
  std::size_t local_dim = 1;
  for (std::size_t s : sites) local_dim *= layout.dims()[s];
  if (op.dim() != local_dim) {
    throw DimensionError("embedding: operator of dimension " + std::to_string(op.dim()) +
                         " does not match site dimension " + std::to_string(local_dim));
  }
  const auto split = split_indices(layout, sites);
  const std::size_t total = layout.total_dim();
  ComplexMatrix out(total);
  for (std::size_t r = 0; r < total; ++r) {
    for (std::size_t c = 0; c < total; ++c) {
      if (split.rest[r] == split.rest[c]) out(r, c) = op(split.local[r], split.local[c]);
    }
  }
  return out;
}

}  // namespace

ComplexMatrix pauli_matrix(Axis axis) {
  switch (axis) {
    case Axis::x:
      return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case Axis::y:
      return ComplexMatrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
    case Axis::z:
      return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  }
  return {};
}

ComplexMatrix heisenberg_pair(double coupling) {
  ComplexMatrix h(4);
  for (Axis axis : kAxes) {
    const ComplexMatrix s = pauli_matrix(axis);
    h += kron(s, s);
  }
  h *= coupling;
  return h;
}

ComplexMatrix embed_two_site(const SubsystemLayout& layout, const std::string& site_i,
                             const std::string& site_j, const ComplexMatrix& op) {
  if (site_i == site_j) throw LayoutError("pair coupling needs two distinct sites, got '" +
                                          site_i + "' twice");
  const std::size_t sites[] = {layout.index_of(site_i), layout.index_of(site_j)};
  return embed_on_sites(layout, sites, op);
}

ComplexMatrix heisenberg_embedded(const SubsystemLayout& layout, const PairCoupling& pair) {
  if (pair.kind == CouplingKind::heisenberg) {
    for (const auto* site : {&pair.site_i, &pair.site_j}) {
      if (layout.dim_of(*site) != 2) {
        throw DimensionError("Heisenberg coupling needs qubits; site '" + *site +
                             "' has dimension " + std::to_string(layout.dim_of(*site)));
      }
    }
    return embed_two_site(layout, pair.site_i, pair.site_j, heisenberg_pair(pair.coupling));
  }
  const double asym = hermiticity_defect(pair.custom);
  if (asym > kHermitianTol) {
    throw NotHermitianError("custom coupling between '" + pair.site_i + "' and '" + pair.site_j +
                                "' is not Hermitian (max asymmetry " + std::to_string(asym) + ")",
                            asym);
  }
  ComplexMatrix op = pair.custom;
  op *= pair.coupling;
  return embed_two_site(layout, pair.site_i, pair.site_j, op);
}

ComplexMatrix embed_noninteracting(const ComplexMatrix& h_a, const SubsystemLayout& layout,
                                   std::span<const std::string> acting_on) {
  std::size_t prefix_dim = 1;
  for (std::size_t k = 0; k < acting_on.size(); ++k) {
    if (k >= layout.size() || layout.labels()[k] != acting_on[k]) {
      throw LayoutError("embed_noninteracting: '" + acting_on[k] +
                        "' is not part of a contiguous prefix of the layout");
    }
    prefix_dim *= layout.dims()[k];
  }
  if (h_a.dim() != prefix_dim) {
    throw DimensionError("embed_noninteracting: operator dimension " + std::to_string(h_a.dim()) +
                         " vs prefix dimension " + std::to_string(prefix_dim));
  }
  return kron(h_a, ComplexMatrix::identity(layout.total_dim() / prefix_dim));
}

ComplexMatrix embed_single_site(const SubsystemLayout& layout, const std::string& site,
                                const ComplexMatrix& op) {
  const std::size_t sites[] = {layout.index_of(site)};
  return embed_on_sites(layout, sites, op);
}

}  // namespace pairchain
