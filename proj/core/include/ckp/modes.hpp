// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "ckp/fock_vector.hpp"
#include "ckp/half_odd.hpp"

namespace ckp {

// chi_n acting on a single basis monomial. For n < 0 this multiplies the
// creation mode in; for n > 0 it contracts against chi_{-n}, with coefficient
// mult * (-1)^(n-1/2) per [chi_m, chi_n] = (-1)^(m-1/2) delta_{m,-n}, and kills
// the monomial when the matching index is absent.
FockVector apply_mode(HalfOdd n, const FockMonomial& m);
FockVector apply_mode(HalfOdd n, const FockVector& v);

// The normal-ordered pair :chi_m chi_l: with annihilation (positive-index)
// modes applied first. For products of two creation or two annihilation modes
// the order is irrelevant, such modes commute.
FockVector apply_normal_pair(HalfOdd m, HalfOdd l, const FockVector& v);

// All basis monomials of doubled degree d2, in the deterministic monomial
// order. The count equals the number of partitions of d2/2 into (repeatable)
// half-odd parts.
std::vector<FockMonomial> monomials_of_degree(int64_t d2);

// All basis monomials of doubled degree d2 and the given charge.
std::vector<FockMonomial> monomials_of_degree_charge(int64_t d2, int32_t charge);

// dim of the degree-d2/2 subspace.
int64_t fock_dimension(int64_t d2);

}  // namespace ckp
