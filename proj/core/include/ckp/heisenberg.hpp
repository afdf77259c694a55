// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ckp/fock_vector.hpp"
#include "ckp/half_odd.hpp"

namespace ckp {

// The two Heisenberg mode families constructed from chi(z), in closed form:
//
//   h^Z_n = (1/2) sum_{m+l=2n} :chi_m chi_l:,          n in Z,
//   h^t_n = (1/2) sum_{m+l=2n} (-1)^(-l-1/2) :chi_m chi_l:,  n in Z+1/2,
//
// with brackets [h_m, h_n] = -m delta_{m+n,0} in both families. The closed
// forms are pinned by tests against a direct field-product expansion and
// against the bracket relations.

// h^Z_n (untwisted), n an integer.
FockVector heis_untwisted(int32_t n, const FockVector& v);

// h^t_n (twisted), n half-odd.
FockVector heis_twisted(HalfOdd n, const FockVector& v);

// Charge operator h^Z_0 (diagonal on monomials).
FockVector grade_charge(const FockVector& v);

// Degree grading: L_0 acts diagonally with 2 L_0 = deg.
FockVector grade_L0(const FockVector& v);
FockVector grade_2L0(const FockVector& v);

// The one-parameter Virasoro zero mode L^lambda_0 (diagonal on monomials);
// L^{-1/4}_0 = L_0.
FockVector grade_Llambda(const Rat& lambda, const FockVector& v);

// Twisted grading L^t_0 = -sum_{n>0} :h^t_{-n} h^t_n:, evaluated exactly with
// the effective cutoff 2n <= deg(v). Vanishes on twisted highest weight
// vectors. The parent Virasoro zero mode carries an extra +1/16 shift,
// exposed as kLchiZeroShift and never added here.
FockVector grade_Lt0(const FockVector& v);

// Shift between L^chi_0 and L^t_0: L^chi_0 = L^t_0 + 1/16.
inline const Rat kLchiZeroShift = Rat(1, 16);

// Untwisted grading L^h_0 = -(1/2)(h^Z_0)^2 - sum_{n>0} [h^Z_{-n} h^Z_n
// + (b - a - a n) h^Z_n]. Character identities use a = b = 0.
FockVector grade_Lh0(const FockVector& v, const Rat& a = Rat(0), const Rat& b = Rat(0));

// Diagonal eigenvalues on a monomial (used by brute-force characters).
Rat eigen_L0(const FockMonomial& m);
Rat eigen_Llambda(const Rat& lambda, const FockMonomial& m);

}  // namespace ckp
