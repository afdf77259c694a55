// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "ckp/characters.hpp"

using namespace ckp;

TEST_CASE("brute-force characters at low order") {
  Series c = char_fock_bruteforce(8);
  CHECK(c.coeff({0, 0}) == Rat(1));
  CHECK(c.coeff({1, 2}) == Rat(1));   // q^{1/2}: charge +1
  CHECK(c.coeff({1, 0}) == Rat(0));
  CHECK(c.coeff({3, 6}) == Rat(1));   // q^{3/2}: z^3 + z^{-1}
  CHECK(c.coeff({3, -2}) == Rat(1));
  CHECK(c.coeff({3, 2}) == Rat(0));
  Series d = char_dimq_bruteforce(8);
  CHECK(d.coeff({3}) == Rat(2));
  CHECK(d.coeff({6}) == Rat(4));
}

TEST_CASE("dim_q product formula") {
  int64_t N = 30;
  CHECK(char_dimq_bruteforce(N) == char_dimq_product(N));
}

TEST_CASE("(q,z) product formula") {
  int64_t N = 20;
  CHECK(char_fock_bruteforce(N) == char_fock_product(N));
}

TEST_CASE("hwv character routes agree at low order") {
  int64_t N = 14;
  HwvCounts counts = hwv_counts(Algebra::untwisted, N);
  Series a = char_hwv_from_counts(counts, N);
  Series b = char_hwv_bpdi(N);
  Series c = char_hwv_product(N);
  CHECK(a == b);
  CHECK(a == c);
  // hwv characters have nonnegative integer coefficients.
  for (const auto& [e, v] : a.terms()) {
    CHECK(v.get_den() == 1);
    CHECK(v > 0);
  }
  // q^{3/2} coefficient: z^3 + z^{-1}.
  CHECK(a.coeff({3, 6}) == Rat(1));
  CHECK(a.coeff({3, -2}) == Rat(1));
}

TEST_CASE("twisted trace: eigen route vs counts route vs ODP route") {
  int64_t N = 10;
  Series eigen = char_qt_eigen(N);
  Series counts = char_qt_from_counts(hwv_counts(Algebra::twisted, N), N);
  Series odp = char_qt_odp(N);
  CHECK(eigen == counts);
  CHECK(eigen == odp);
  // Coefficient of q^1: t^{1/2} only (descendant of the q^{1/2} hwv).
  CHECK(eigen.coeff({2, 1}) == Rat(1));
  CHECK(eigen.coeff({2, 0}) == Rat(0));
}

TEST_CASE("triple trace: eigen route vs counts route vs BP_DI route") {
  int64_t N = 8;
  Series eigen = char_triple_eigen(N);
  Series counts = char_triple_from_counts(hwv_counts(Algebra::untwisted, N), N);
  Series bpdi = char_triple_bpdi(N);
  CHECK(eigen == counts);
  CHECK(eigen == bpdi);
  // r = 1 specialization forgets to the (q,z) character.
  Series fock = char_fock_bruteforce(N);
  Series folded(kQZ, window_qz(N));
  for (const auto& [e, c] : eigen.terms()) folded.add_term({e[0], e[1]}, c);
  CHECK(folded == fock);
}

TEST_CASE("crank generating function at low order") {
  CrankTable table(10);
  Series gf = crank_gf_from_table(table, 20);
  Series gfp = crank_gf_product(20);
  CHECK(gf == gfp);
  // q^1 row: z + z^{-1} - 1.
  CHECK(gf.coeff({2, 2}) == Rat(1));
  CHECK(gf.coeff({2, -2}) == Rat(1));
  CHECK(gf.coeff({2, 0}) == Rat(-1));
}

TEST_CASE("jacobi triangular identity") {
  CHECK(jacobi_triangular_sum(48) == jacobi_triangular_product(48));
  Series s = jacobi_triangular_sum(48);
  CHECK(s.coeff({0}) == Rat(1));
  CHECK(s.coeff({4}) == Rat(1));
  CHECK(s.coeff({8}) == Rat(0));
  CHECK(s.coeff({12}) == Rat(1));
  CHECK(s.coeff({24}) == Rat(1));
  CHECK(s.coeff({40}) == Rat(1));
}

TEST_CASE("trace coefficients are integral multiplicities") {
  int64_t N = 12;
  for (const Series& s : {char_qt_from_counts(hwv_counts(Algebra::twisted, N), N),
                          char_triple_from_counts(hwv_counts(Algebra::untwisted, N), N),
                          char_fock_bruteforce(N)}) {
    for (const auto& [e, c] : s.terms()) {
      CHECK(c.get_den() == 1);
      CHECK(c > 0);
    }
  }
}

TEST_CASE("dim_q low-order coefficients") {
  // 1 + q^{1/2} + q + 2 q^{3/2} + 2 q^2 + ...
  Series d = char_dimq_product(8);
  CHECK(d.coeff({0}) == Rat(1));
  CHECK(d.coeff({1}) == Rat(1));
  CHECK(d.coeff({2}) == Rat(1));
  CHECK(d.coeff({3}) == Rat(2));
  CHECK(d.coeff({4}) == Rat(2));
}
