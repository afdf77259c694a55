// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ckp/fock_vector.hpp"

namespace ckp {

enum class Algebra { untwisted, twisted };

// Exact highest-weight-vector predicate: h_n v = 0 for every positive mode of
// the chosen algebra with 2n <= 2 deg(v).
bool is_hwv(Algebra alg, const FockVector& v);

// Basis of the space of highest weight vectors of the given doubled degree,
// as the kernel of the stacked annihilation-mode constraints on the degree-d2
// monomial subspace. Vectors are echelon-normalized: the first nonzero
// coordinate in the deterministic monomial order is 1, and distinct vectors
// have distinct leading monomials. Deterministic across runs.
struct HwvBasis {
  Algebra algebra = Algebra::untwisted;
  int64_t degree2 = 0;
  std::vector<FockVector> vectors;
  std::vector<int32_t> charges;  // untwisted only: charge per vector
};
HwvBasis hwv_basis(Algebra alg, int64_t degree2);

// Reference solver: plain exact Gaussian elimination over Q on the stacked
// constraint matrix. Same output contract as hwv_basis; used as a cross-check
// and as the fallback when the certified fast path cannot close.
HwvBasis hwv_basis_reference(Algebra alg, int64_t degree2);

// Certified highest-weight-vector counts for all degrees <= max_degree2.
// Every count is exact: lifted kernel vectors are verified against all
// constraints with exact arithmetic, and the modular rank bound pins the
// dimension from above.
struct HwvCounts {
  std::map<int64_t, int64_t> by_degree2;
  // Untwisted only: counts keyed by (degree2, charge).
  std::map<std::pair<int64_t, int32_t>, int64_t> by_degree2_charge;
};
HwvCounts hwv_counts(Algebra alg, int64_t max_degree2);

// Eigenvector basis of the degree-d2 subspace built from Heisenberg
// descendants of the highest weight vectors of lower degrees. Asserts full
// rank (a rank-deficient set would falsify the Heisenberg decomposition) and
// records eigenvalues obtained by applying the grading operators, not from
// the construction.
struct EigenRecord {
  FockVector v;
  Rat deg;      // eigenvalue of 2 L_0
  Rat lt0;      // twisted: eigenvalue of L^t_0
  int32_t charge = 0;  // untwisted
  Rat lh0;      // untwisted: eigenvalue of L^h_0 at a=b=0
};
std::vector<EigenRecord> eigenbasis(Algebra alg, int64_t degree2);

}  // namespace ckp
