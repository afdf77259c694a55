// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/modes.hpp"

#include <algorithm>

namespace ckp {

FockVector apply_mode(HalfOdd n, const FockMonomial& m) {
  FockVector out;
  if (!n.positive()) {
    out.add_term(m.with_part_added(-n.twice()), Rat(1));
    return out;
  }
  int32_t mult = m.multiplicity(n.twice());
  if (mult == 0) return out;  // annihilates, incl. chi_n|0> = 0
  out.add_term(m.with_part_removed(n.twice()), Rat(mult * contraction_sign(n)));
  return out;
}

FockVector apply_mode(HalfOdd n, const FockVector& v) {
  FockVector out;
  if (!n.positive()) {
    for (const auto& [m, c] : v.terms()) out.add_term(m.with_part_added(-n.twice()), c);
    return out;
  }
  for (const auto& [m, c] : v.terms()) {
    int32_t mult = m.multiplicity(n.twice());
    if (mult == 0) continue;
    out.add_term(m.with_part_removed(n.twice()), c * Rat(mult * contraction_sign(n)));
  }
  return out;
}

FockVector apply_normal_pair(HalfOdd m, HalfOdd l, const FockVector& v) {
  // Annihilators first: when m > 0 > l, :chi_m chi_l: = chi_l chi_m.
  if (m.positive() && !l.positive()) return apply_mode(l, apply_mode(m, v));
  return apply_mode(m, apply_mode(l, v));
}

namespace {

void enumerate_rec(int64_t remaining2, int32_t max_idx2, std::vector<FockMonomial::Part>& acc,
                   std::vector<FockMonomial>& out) {
  if (remaining2 == 0) {
    std::vector<FockMonomial::Part> parts(acc.rbegin(), acc.rend());
    out.emplace_back(std::move(parts));
    return;
  }
  // Parts descending: choose the next (largest remaining) index, always odd.
  int32_t start = int32_t(std::min<int64_t>(max_idx2, remaining2));
  if (start % 2 == 0) --start;
  for (int32_t j2 = start; j2 >= 1; j2 -= 2) {
    int32_t count = 0;
    for (int64_t used = j2; used <= remaining2; used += j2) {
      ++count;
      acc.push_back({j2, count});
      enumerate_rec(remaining2 - used, j2 - 2, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<FockMonomial> monomials_of_degree(int64_t d2) {
  std::vector<FockMonomial> out;
  if (d2 < 0) return out;
  std::vector<FockMonomial::Part> acc;
  enumerate_rec(d2, d2 % 2 == 0 ? d2 - 1 : d2, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FockMonomial> monomials_of_degree_charge(int64_t d2, int32_t charge) {
  std::vector<FockMonomial> out;
  for (auto& m : monomials_of_degree(d2))
    if (m.charge() == charge) out.push_back(std::move(m));
  return out;
}

int64_t fock_dimension(int64_t d2) {
  if (d2 < 0) return 0;
  // Count partitions of d2 into odd parts (doubled half-odd parts are odd).
  std::vector<int64_t> p(d2 + 1, 0);
  p[0] = 1;
  for (int64_t part = 1; part <= d2; part += 2)
    for (int64_t s = part; s <= d2; ++s) p[s] += p[s - part];
  return p[d2];
}

}  // namespace ckp
