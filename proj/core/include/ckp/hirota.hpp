// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckp/fock_vector.hpp"
#include "ckp/half_odd.hpp"

namespace ckp {

// The Hirota operator S^C = sum_n (-1)^(n-1/2) chi_n (x) chi_{-n} on the
// tensor square. Exact on finite tensors: only |n| up to the larger bidegree
// contributes.
TensorVector hirota_apply(const TensorVector& w);

// Scan report for the no-finite-solution check: S^C(v (x) v) must be nonzero
// for every v with nonvacuum support.
struct ScanReport {
  int64_t monomials_checked = 0;
  int64_t random_checked = 0;
  bool clean = true;
  std::string violation;  // description of a falsifying v, when found
};
ScanReport no_solution_scan(int64_t max_degree2, int trials, uint64_t seed);

// Commutation of S^C with E = -:chi_a chi_b: acting as E(x)1 + 1(x)E, checked
// on all tensor basis elements of bidegree <= (D2, D2).
bool symmetry_check(HalfOdd a, HalfOdd b, int64_t probe2);

// --- c_infinity machinery ---

// A finite combination of normal-ordered quadratics :chi_a chi_b: plus a
// scalar. Canonical keys have a <= b (the normal-ordered pair is symmetric).
struct QuadCombo {
  std::map<std::pair<int32_t, int32_t>, Rat> quads;  // (a2, b2) -> coeff
  Rat scalar = Rat(0);

  void add(int32_t a2, int32_t b2, const Rat& c);
  bool operator==(const QuadCombo& o) const { return quads == o.quads && scalar == o.scalar; }
};

// Wick oracle: [:chi_a chi_b:, :chi_c chi_d:] expanded with the mode bracket
// only, returned as normal-ordered quadratics plus the central scalar.
QuadCombo wick_commutator(HalfOdd a, HalfOdd b, HalfOdd c, HalfOdd d);

// An element of c_infinity: combination of elementary matrices E_{ij} plus a
// central coordinate.
struct CinftyElem {
  std::map<std::pair<int64_t, int64_t>, Rat> entries;
  Rat central = Rat(0);
};

// The generator attached to -:chi_a chi_b: under E(z,w) -> -:chi(z)chi(w):.
CinftyElem cinfty_generator(HalfOdd a, HalfOdd b);
// Bracket with the cocycle C(E_ij, E_ji) = 1 for i <= 0, j >= 1.
CinftyElem cinfty_bracket(const CinftyElem& x, const CinftyElem& y);
// Expresses a centreless element in quadratics via the generator dictionary;
// throws if the entry pattern violates the c-bar_infinity symmetry.
QuadCombo cinfty_to_quadratics(const CinftyElem& x);

// Applies -sum coeff :chi_a chi_b: (the quadratic part only) to a vector.
FockVector apply_quadcombo_rep(const QuadCombo& q, const FockVector& v);

// Central charge probe on one generator pair: computes [E_ab, E_cd] on the
// degree <= probe2 basis, subtracts the predicted non-central part, and
// checks the residual is the cocycle times -1/2 (and that +1/2 fails).
struct CentralProbeResult {
  Rat cocycle;
  Rat residual;
  bool residual_is_scalar = false;
  bool matches_minus_half = false;
  bool mutation_fails = false;  // residual != cocycle * (+1/2) whenever cocycle != 0
  bool wick_agrees = false;     // Wick oracle reproduces bracket + central
};
CentralProbeResult central_charge_probe(HalfOdd a, HalfOdd b, HalfOdd c, HalfOdd d,
                                        int64_t probe2);

// Res_z (beta (x) gamma - gamma (x) beta) versus S^C on all tensor basis
// elements of bidegree <= (D2, D2); records the single global scalar.
struct BetaGammaReport {
  bool pass = false;
  Rat scalar;  // S^C = scalar * Res_z(...)
};
BetaGammaReport beta_gamma_equivalence(int64_t probe2);

// A degree-raising quadratic exp generator: tau = exp(-sum c_{mn} :chi_m
// chi_n:)|0>. Support must be creation-creation so the exponential is
// degree-filtered; anything else throws std::invalid_argument.
struct QuadraticGenerator {
  std::map<std::pair<int32_t, int32_t>, Rat> coeffs;  // (m2, n2), both negative

  int64_t max_shift2() const;  // largest |m|+|n| over the support
  int32_t max_index2() const;  // largest |single index| over the support
};

// Truncation of exp(g)|0> to degree <= D2.
FockVector exp_orbit_tau(const QuadraticGenerator& g, int64_t cutoff2);

// Checks S^C(tau (x) tau) = 0 on the window of bidegrees where the truncated
// tau determines the exact answer. With tau exact up to degree D2 and J2 the
// largest mode index appearing in tau, the (d1, d2) component of S^C(tau (x)
// tau) is exact whenever min(J2, d1) <= D2 - d2 and min(J2, d2) <= D2 - d1:
// an error term needs a chi_n with |n| <= J2 to reach across the truncation
// boundary. In particular the square window d1, d2 <= D2 - J2 is always safe.
bool hirota_residual_vanishes(const FockVector& tau, int64_t tau_cutoff2, int64_t window2);

}  // namespace ckp
