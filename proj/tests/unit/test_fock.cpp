// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>

#include "ckp/modes.hpp"
#include "test_util.hpp"

using namespace ckp;
using ckp::test::mono;

TEST_CASE("monomial degree, charge, order") {
  CHECK(FockMonomial::vacuum().degree2() == 0);
  CHECK(FockMonomial::vacuum().charge() == 0);
  CHECK(mono({1}).charge() == 1);
  CHECK(mono({3}).charge() == -1);
  CHECK(mono({3, 1}).charge() == 0);
  CHECK(mono({5}).charge() == 1);
  CHECK(mono({9, 9, 9, 5, 5, 3, 1}).degree2() == 41);
  CHECK(mono({9, 9, 9, 5, 5, 3, 1}).charge() == 3 + 2 + 1 - 1);
  // Deterministic order: degree first, then lexicographic expanded lists.
  CHECK(mono({1, 1, 1}) < mono({3}));
  CHECK(mono({1, 1, 1, 1, 1}) < mono({3, 1, 1}));
  CHECK(mono({3, 1, 1}) < mono({5}));
  CHECK(FockMonomial::vacuum() < mono({1}));
}

TEST_CASE("apply_mode matches the mode bracket") {
  FockVector vac = FockVector::vacuum();
  // chi_{1/2} chi_{-1/2} |0> = |0>
  CHECK(apply_mode(HalfOdd(1), apply_mode(HalfOdd(-1), vac)) == vac);
  // chi_{3/2} chi_{-3/2} |0> = -|0>
  FockVector m = apply_mode(HalfOdd(3), apply_mode(HalfOdd(-3), vac));
  CHECK(m == Rat(-1) * FockVector::vacuum());
  // chi_{1/2} |0> = 0
  CHECK(apply_mode(HalfOdd(1), vac).is_zero());
  // chi_{5/2} (chi_{-5/2}^2 |0>) = 2 chi_{-5/2} |0>
  FockVector twice = FockVector::basis(mono({5, 5}));
  CHECK(apply_mode(HalfOdd(5), twice) == Rat(2) * FockVector::basis(mono({5})));
}

TEST_CASE("commutator relation on a probe window") {
  // [chi_m, chi_n] = (-1)^(m-1/2) delta_{m,-n} on all monomials of degree <= 3,
  // for |m|, |n| <= 7/2.
  for (int64_t d2 = 0; d2 <= 6; ++d2) {
    for (const auto& mm : monomials_of_degree(d2)) {
      FockVector v = FockVector::basis(mm);
      for (int32_t m2 = -7; m2 <= 7; m2 += 2) {
        for (int32_t n2 = -7; n2 <= 7; n2 += 2) {
          FockVector lhs = apply_mode(HalfOdd(m2), apply_mode(HalfOdd(n2), v)) -
                           apply_mode(HalfOdd(n2), apply_mode(HalfOdd(m2), v));
          FockVector rhs;
          if (m2 == -n2) rhs = Rat(contraction_sign(HalfOdd(m2))) * v;
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("normal pairs") {
  FockVector v1 = FockVector::basis(mono({1}));
  // :chi_{-1/2} chi_{1/2}: acts as the number operator on the 1/2 slot.
  CHECK(apply_normal_pair(HalfOdd(-1), HalfOdd(1), v1) == v1);
  CHECK(apply_normal_pair(HalfOdd(1), HalfOdd(-1), v1) == v1);
  FockVector v33 = FockVector::basis(mono({3, 3}));
  CHECK(apply_normal_pair(HalfOdd(-3), HalfOdd(3), v33) == Rat(-2) * v33);
}

TEST_CASE("monomials_of_degree enumeration") {
  CHECK(monomials_of_degree(0).size() == 1);
  CHECK(monomials_of_degree(0)[0].is_vacuum());
  // degree 3/2: chi_{-1/2}^3 and chi_{-3/2}
  auto d3 = monomials_of_degree(3);
  REQUIRE(d3.size() == 2);
  CHECK(d3[0] == mono({1, 1, 1}));
  CHECK(d3[1] == mono({3}));
  // degree 3 (doubled 6): partitions of 6 into odd parts: 1^6, 3 1^3, 3^2, 5 1.
  CHECK(monomials_of_degree(6).size() == 4);
  // Count always equals the partition-into-odd-parts oracle.
  for (int64_t d2 = 0; d2 <= 24; ++d2) {
    CHECK(int64_t(monomials_of_degree(d2).size()) == fock_dimension(d2));
    auto layer = monomials_of_degree(d2);
    CHECK(std::is_sorted(layer.begin(), layer.end(),
                         [](const FockMonomial& a, const FockMonomial& b) { return a < b; }));
  }
}

TEST_CASE("degree additivity and charge steps") {
  for (const auto& m : monomials_of_degree(7)) {
    for (int32_t j2 : {1, 3, 5}) {
      FockVector up = apply_mode(HalfOdd(-j2), FockVector::basis(m));
      const auto& mm = up.terms().begin()->first;
      CHECK(mm.degree2() == m.degree2() + j2);
      CHECK(mm.charge() == m.charge() + charge_step(HalfOdd(-j2)));
    }
  }
}
