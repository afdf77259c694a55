// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <string>

namespace ckp {

// An element of Z + 1/2, stored as its doubled (odd) integer value.
// All half-integer bookkeeping in the library runs on doubled integers.
class HalfOdd {
 public:
  constexpr HalfOdd() : twice_(1) {}
  explicit constexpr HalfOdd(int32_t twice_value) : twice_(twice_value) {
    assert(twice_value % 2 != 0);
  }

  constexpr int32_t twice() const { return twice_; }
  constexpr bool positive() const { return twice_ > 0; }
  constexpr HalfOdd operator-() const { return HalfOdd(-twice_); }

  friend constexpr auto operator<=>(HalfOdd, HalfOdd) = default;

  std::string str() const { return std::to_string(twice_) + "/2"; }

 private:
  int32_t twice_;
};

// (-1)^(m - 1/2), the contraction sign in [chi_m, chi_n] = (-1)^(m-1/2) delta_{m,-n}.
constexpr int contraction_sign(HalfOdd m) {
  // m - 1/2 = (twice - 1)/2, an exact integer since twice is odd.
  int32_t e = (m.twice() - 1) / 2;
  return (e % 2 == 0) ? 1 : -1;
}

// (-1)^(-l - 1/2), the alternating sign in the twisted Heisenberg mode sum.
constexpr int twisted_sign(HalfOdd l) {
  int32_t e = (-l.twice() - 1) / 2;
  return (e % 2 == 0) ? 1 : -1;
}

// Charge step of chi_k: -1 when k = 1/2 (mod 2), +1 when k = 3/2 (mod 2).
// Creation operators chi_{-j} with j = 1/2 (mod 2) raise the charge, those with
// j = 3/2 (mod 2) lower it; annihilation is the reverse.
constexpr int charge_step(HalfOdd k) {
  int32_t m = ((k.twice() % 4) + 4) % 4;  // 1 or 3
  return m == 1 ? -1 : 1;
}

// Whether two mode indices are congruent mod 2 (i.e. their doubled values mod 4 agree).
constexpr bool same_mod2_class(HalfOdd a, HalfOdd b) {
  return ((a.twice() - b.twice()) % 4) == 0;
}

}  // namespace ckp
