// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "ckp/hirota.hpp"
#include "ckp/modes.hpp"
#include "test_util.hpp"

using namespace ckp;
using ckp::test::mono;
using ckp::test::vec;

TEST_CASE("Hirota operator basics") {
  TensorVector vacvac = tensor_of(FockVector::vacuum(), FockVector::vacuum());
  CHECK(hirota_apply(vacvac).is_zero());

  FockVector v = FockVector::basis(mono({1}));
  TensorVector vv = tensor_of(v, v);
  TensorVector s = hirota_apply(vv);
  CHECK(!s.is_zero());
  // S^C(v (x) v) = |0> (x) chi^2|0> - chi^2|0> (x) |0>.
  TensorVector expect;
  expect.add_term(FockMonomial::vacuum(), mono({1, 1}), Rat(1));
  expect.add_term(mono({1, 1}), FockMonomial::vacuum(), Rat(-1));
  CHECK(s == expect);

  // Swapping tensor factors negates S^C on symmetric tensors.
  for (const auto& m1 : monomials_of_degree(3)) {
    for (const auto& m2 : monomials_of_degree(4)) {
      TensorVector w;
      w.add_term(m1, m2, Rat(1));
      w.add_term(m2, m1, Rat(1));
      TensorVector out = hirota_apply(w);
      TensorVector swapped;
      for (const auto& [key, c] : out.terms()) swapped.add_term(key.second, key.first, c);
      TensorVector negated = out;
      negated *= Rat(-1);
      CHECK(swapped == negated);
    }
  }
}

TEST_CASE("no-solution scan") {
  ScanReport r = no_solution_scan(8, 10, 12345);
  CHECK(r.clean);
  CHECK(r.monomials_checked > 0);
  CHECK(r.random_checked == 8 * 10);
  // chi_{-3/2}|0> is not a solution; a mixed vector is not either.
  FockVector v3 = FockVector::basis(mono({3}));
  CHECK(!hirota_apply(tensor_of(v3, v3)).is_zero());
  FockVector mixed = FockVector::vacuum() + FockVector::basis(mono({1}));
  CHECK(!hirota_apply(tensor_of(mixed, mixed)).is_zero());
}

TEST_CASE("symmetry of the Hirota operator under c_infinity") {
  CHECK(symmetry_check(HalfOdd(-1), HalfOdd(-1), 4));
  CHECK(symmetry_check(HalfOdd(1), HalfOdd(-3), 4));
  CHECK(symmetry_check(HalfOdd(3), HalfOdd(5), 4));
  CHECK(symmetry_check(HalfOdd(-5), HalfOdd(3), 4));
}

TEST_CASE("wick oracle") {
  // [:chi_{1/2}^2:, :chi_{-1/2}^2:] = 4 :chi_{-1/2}chi_{1/2}: + 2.
  QuadCombo w = wick_commutator(HalfOdd(1), HalfOdd(1), HalfOdd(-1), HalfOdd(-1));
  QuadCombo expect;
  expect.add(-1, 1, Rat(4));
  expect.scalar = Rat(2);
  CHECK(w == expect);
  // Disjoint modes commute.
  QuadCombo zero = wick_commutator(HalfOdd(1), HalfOdd(3), HalfOdd(5), HalfOdd(7));
  CHECK(zero.quads.empty());
  CHECK(is_zero(zero.scalar));
}

TEST_CASE("central charge probe") {
  // E_{1/2,1/2} against its transpose: cocycle -4, residual +2.
  CentralProbeResult r =
      central_charge_probe(HalfOdd(1), HalfOdd(1), HalfOdd(-1), HalfOdd(-1), 5);
  CHECK(r.wick_agrees);
  CHECK(r.residual_is_scalar);
  CHECK(r.cocycle == Rat(-4));
  CHECK(r.residual == Rat(2));
  CHECK(r.matches_minus_half);
  CHECK(r.mutation_fails);
  // A commuting pair has zero residual.
  CentralProbeResult z =
      central_charge_probe(HalfOdd(1), HalfOdd(3), HalfOdd(5), HalfOdd(7), 4);
  CHECK(z.residual_is_scalar);
  CHECK(is_zero(z.residual));
  CHECK(is_zero(z.cocycle));
  CHECK(z.matches_minus_half);
  // Every pair over a window.
  for (int32_t a = -3; a <= 3; a += 2)
    for (int32_t b = -3; b <= 3; b += 2)
      for (int32_t c = -3; c <= 3; c += 2)
        for (int32_t d = -3; d <= 3; d += 2) {
          CentralProbeResult p =
              central_charge_probe(HalfOdd(a), HalfOdd(b), HalfOdd(c), HalfOdd(d), 4);
          CHECK(p.wick_agrees);
          CHECK(p.residual_is_scalar);
          CHECK(p.matches_minus_half);
          CHECK(p.mutation_fails);
        }
}

TEST_CASE("beta-gamma form of the Hirota operator") {
  BetaGammaReport r = beta_gamma_equivalence(6);
  CHECK(r.pass);
  CHECK(r.scalar == Rat(1));
}

TEST_CASE("exponential orbit tau functions") {
  // g = 0: tau = |0>, residual vanishes everywhere.
  QuadraticGenerator zero;
  FockVector tau0 = exp_orbit_tau(zero, 12);
  CHECK(tau0 == FockVector::vacuum());
  CHECK(hirota_residual_vanishes(tau0, 12, 6));

  // Single-term generator.
  QuadraticGenerator g1;
  g1.coeffs[{-1, -3}] = rat(2, 3);
  FockVector tau1 = exp_orbit_tau(g1, 12);
  CHECK(!tau1.is_zero());
  CHECK(hirota_residual_vanishes(tau1, 12, 12 - g1.max_shift2()));

  // Two-term generator with small rational coefficients.
  QuadraticGenerator g2;
  g2.coeffs[{-1, -3}] = rat(-1, 2);
  g2.coeffs[{-5, -1}] = rat(3, 7);
  FockVector tau2 = exp_orbit_tau(g2, 14);
  CHECK(hirota_residual_vanishes(tau2, 14, 14 - g2.max_shift2()));

  // Annihilation support is rejected.
  QuadraticGenerator bad;
  bad.coeffs[{1, -3}] = Rat(1);
  CHECK_THROWS_AS((void)exp_orbit_tau(bad, 6), std::invalid_argument);
}

TEST_CASE("truncated Hirota dependency bound") {
  // The (d1,d2) component of S^C(tau (x) tau) with d1,d2 inside the window
  // must not change when tau is extended to a higher cutoff.
  QuadraticGenerator g;
  g.coeffs[{-1, -3}] = rat(1, 2);
  g.coeffs[{-3, -3}] = rat(-2, 5);
  for (int64_t cut2 : {8, 10}) {
    FockVector tau_a = exp_orbit_tau(g, cut2);
    FockVector tau_b = exp_orbit_tau(g, cut2 + 4);
    int64_t win2 = cut2 - g.max_index2();
    TensorVector ra = hirota_apply(tensor_of(tau_a, tau_a)).bidegree_window(win2, win2);
    TensorVector rb = hirota_apply(tensor_of(tau_b, tau_b)).bidegree_window(win2, win2);
    CHECK(ra == rb);
  }
}
