// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/heisenberg.hpp"

#include <cassert>

#include "ckp/modes.hpp"

namespace ckp {

namespace {

// Coefficient of the unordered pair {a, b} in the mode sum, i.e. the sum of
// the ordered-pair coefficients. Twisted pairs with a != b (mod 2) cancel.
Rat pair_coeff(bool twisted, HalfOdd a, HalfOdd b) {
  if (!twisted) return a == b ? Rat(1, 2) : Rat(1);
  if (a == b) return rat(twisted_sign(a), 2);
  return rat(twisted_sign(a) + twisted_sign(b), 2);
}

// Applies (1/2) sum_{m+l=2n} c(m,l) :chi_m chi_l: to a monomial, where the
// doubled index sum is sum2 = 2*(2n). Only finitely many pairs act: both
// indices negative (pure creation), or the positive index matches a part.
void apply_quadratic_sum(bool twisted, int64_t sum2, const FockMonomial& mono, const Rat& coeff,
                         FockVector& out) {
  // Pure creation pairs: a2 <= b2 < 0, a2 + b2 = sum2.
  if (sum2 <= -2) {
    for (int64_t a2 = sum2 + 1; 2 * a2 <= sum2; a2 += 2) {
      int64_t b2 = sum2 - a2;
      if (b2 >= 0) continue;
      HalfOdd a{int32_t(a2)};
      HalfOdd b{int32_t(b2)};
      Rat c = pair_coeff(twisted, a, b);
      if (is_zero(c)) continue;
      out.add_term(mono.with_part_added(int32_t(-a2)).with_part_added(int32_t(-b2)), coeff * c);
    }
  }
  // Pairs with at least one annihilator: the positive index must be a part.
  for (const auto& p : mono.parts()) {
    int64_t l2 = p.idx2;
    int64_t m2 = sum2 - l2;
    if (m2 < 0) {
      // Mixed pair {m2 (creation), l2 (annihilation)}: apply l then m.
      HalfOdd l{int32_t(l2)};
      HalfOdd m{int32_t(m2)};
      Rat c = pair_coeff(twisted, m, l);
      if (is_zero(c)) continue;
      Rat contraction = Rat(p.mult * contraction_sign(l));
      out.add_term(mono.with_part_removed(p.idx2).with_part_added(int32_t(-m2)),
                   coeff * c * contraction);
    } else if (m2 > 0) {
      // Double annihilation {m2, l2}, both must be removable. Enumerate each
      // unordered pair once: require l2 <= m2.
      if (l2 > m2) continue;
      HalfOdd l{int32_t(l2)};
      HalfOdd m{int32_t(m2)};
      if (l2 == m2 && p.mult < 2) continue;
      if (l2 != m2 && mono.multiplicity(int32_t(m2)) == 0) continue;
      Rat c = pair_coeff(twisted, m, l);
      if (is_zero(c)) continue;
      FockMonomial once = mono.with_part_removed(p.idx2);
      Rat contraction = Rat(p.mult * contraction_sign(l)) *
                        Rat(once.multiplicity(int32_t(m2)) * contraction_sign(m));
      out.add_term(once.with_part_removed(int32_t(m2)), coeff * c * contraction);
    }
  }
}

FockVector apply_heis(bool twisted, int64_t sum2, const FockVector& v) {
  FockVector out;
  for (const auto& [m, c] : v.terms()) apply_quadratic_sum(twisted, sum2, m, c, out);
  return out;
}

}  // namespace

FockVector heis_untwisted(int32_t n, const FockVector& v) {
  return apply_heis(false, 4LL * n, v);
}

FockVector heis_twisted(HalfOdd n, const FockVector& v) {
  return apply_heis(true, 2LL * n.twice(), v);
}

FockVector grade_charge(const FockVector& v) {
  FockVector out;
  for (const auto& [m, c] : v.terms()) out.add_term(m, c * Rat(m.charge()));
  return out;
}

Rat eigen_L0(const FockMonomial& m) { return rat(m.degree2(), 4); }

Rat eigen_Llambda(const Rat& lambda, const FockMonomial& m) {
  // L^lambda_0 = L_0 - (lambda + 1/4) h^Z_0 on the monomial eigenbasis.
  return eigen_L0(m) - (lambda + Rat(1, 4)) * Rat(m.charge());
}

FockVector grade_L0(const FockVector& v) {
  FockVector out;
  for (const auto& [m, c] : v.terms()) out.add_term(m, c * eigen_L0(m));
  return out;
}

FockVector grade_2L0(const FockVector& v) {
  FockVector out;
  for (const auto& [m, c] : v.terms()) out.add_term(m, c * rat(m.degree2(), 2));
  return out;
}

FockVector grade_Llambda(const Rat& lambda, const FockVector& v) {
  FockVector out;
  for (const auto& [m, c] : v.terms()) out.add_term(m, c * eigen_Llambda(lambda, m));
  return out;
}

FockVector grade_Lt0(const FockVector& v) {
  // -sum_{n>0} h^t_{-n} h^t_n; modes with 2n > deg annihilate, so the cutoff
  // is exact, not a truncation.
  FockVector out;
  int64_t dmax2 = v.max_degree2();
  for (int32_t n2 = 1; 2 * n2 <= dmax2; n2 += 2) {
    FockVector lowered = heis_twisted(HalfOdd(n2), v);
    if (lowered.is_zero()) continue;
    out -= heis_twisted(HalfOdd(-n2), lowered);
  }
  return out;
}

FockVector grade_Lh0(const FockVector& v, const Rat& a, const Rat& b) {
  FockVector out;
  // -(1/2) (h^Z_0)^2 is diagonal.
  for (const auto& [m, c] : v.terms())
    out.add_term(m, c * rat(-int64_t(m.charge()) * m.charge(), 2));
  int64_t dmax2 = v.max_degree2();
  for (int32_t n = 1; 4 * n <= dmax2; ++n) {
    FockVector lowered = heis_untwisted(n, v);
    if (lowered.is_zero()) continue;
    out -= heis_untwisted(-n, lowered);
    Rat cn = b - a - a * Rat(n);
    if (!is_zero(cn)) out -= cn * lowered;
  }
  return out;
}

}  // namespace ckp
