// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/characters.hpp"

#include "ckp/heisenberg.hpp"
#include "ckp/modes.hpp"

namespace ckp {

Window window_q(int64_t N) { return Window{N, {}}; }
// |charge| <= deg, so the doubled z exponent is at most 2N at u <= N.
Window window_qz(int64_t N) { return Window{N, {2 * N}}; }
// L^t_0 eigenvalues grow at half the degree: doubled t exponent <= N.
Window window_qt(int64_t N) { return Window{N, {N}}; }
// L^h_0 eigenvalues reach -charge^2/2: doubled r exponent within N^2.
Window window_qzr(int64_t N) { return Window{N, {2 * N, N * N + N}}; }

Series char_dimq_bruteforce(int64_t N) {
  Series s(kQ, window_q(N));
  for (int64_t d2 = 0; d2 <= N; ++d2) s.add_term({d2}, Rat(fock_dimension(d2)));
  return s;
}

Series char_dimq_product(int64_t N) {
  Series s = Series::one(kQ, window_q(N));
  for (int64_t o = 1; o <= N; o += 2) s.mul_geometric({o}, Rat(1));
  return s;
}

Series char_fock_bruteforce(int64_t N) {
  Series s(kQZ, window_qz(N));
  for (int64_t d2 = 0; d2 <= N; ++d2)
    for (const auto& m : monomials_of_degree(d2)) s.add_term({d2, 2 * m.charge()}, Rat(1));
  return s;
}

Series char_fock_product(int64_t N) {
  Series s = Series::one(kQZ, window_qz(N));
  for (int64_t j = 1; 4 * j - 3 <= N; ++j) s.mul_geometric({4 * j - 3, 2}, Rat(1));
  for (int64_t j = 1; 4 * j - 1 <= N; ++j) s.mul_geometric({4 * j - 1, -2}, Rat(1));
  return s;
}

Series char_hwv_from_counts(const HwvCounts& counts, int64_t N) {
  Series s(kQZ, window_qz(N));
  for (const auto& [key, count] : counts.by_degree2_charge) {
    const auto& [d2, c] = key;
    if (d2 <= N) s.add_term({d2, 2 * c}, Rat(count));
  }
  return s;
}

Series char_hwv_bpdi(int64_t N) {
  Series s(kQZ, window_qz(N));
  for (const auto& bp : enumerate_bpdi(N)) s.add_term({weight_W2(bp), 2 * birank(bp)}, Rat(1));
  return s;
}

Series char_hwv_product(int64_t N) {
  Series s = char_fock_product(N);
  for (int64_t n = 1; 4 * n <= N; ++n) s.mul_one_minus({4 * n, 0}, Rat(1));
  return s;
}

Series identityR_lhs(int64_t N) {
  auto term1 = [&](int64_t k) {
    Series t = Series::monomial(kQZ, window_qz(N), {k, 2 * k});
    return t.mul_geometric({4 * k + 3, -2}, Rat(-1));
  };
  auto term2 = [&](int64_t k) {
    Series t = Series::monomial(kQZ, window_qz(N), {3 * k, -2 * k});
    return t.mul_geometric({4 * k + 1, 2}, Rat(-1));
  };
  Series s = sum_eval(kQZ, window_qz(N), term1, [](int64_t k) { return k; });
  s += sum_eval(kQZ, window_qz(N), term2, [](int64_t k) { return 3 * k; });
  return s;
}

Series identityR_rhs(int64_t N) {
  Series s = Series::one(kQZ, window_qz(N));
  s *= Rat(2);
  for (int64_t l = 1; 8 * l <= N; ++l) {
    s.mul_one_minus({8 * l, 0}, Rat(1));
    s.mul_one_minus({8 * l, 0}, Rat(1));
  }
  for (int64_t l = 1; 8 * l - 6 <= N; ++l) s.mul_geometric({8 * l - 6, 4}, Rat(1));
  for (int64_t l = 1; 8 * l - 2 <= N; ++l) s.mul_geometric({8 * l - 2, -4}, Rat(1));
  return s;
}

namespace {

// prod (1 + z q^{2l-3/2})(1 + z^{-1} q^{2l-1/2}), the shared numerator of the
// sum-vs-product closed forms.
Series sum_formula_numerator(int64_t N) {
  Series s = Series::one(kQZ, window_qz(N));
  for (int64_t l = 1; 4 * l - 3 <= N; ++l) s.mul_one_minus({4 * l - 3, 2}, Rat(-1));
  for (int64_t l = 1; 4 * l - 1 <= N; ++l) s.mul_one_minus({4 * l - 1, -2}, Rat(-1));
  return s;
}

}  // namespace

Series char_hwv_sum_formula(int64_t N) {
  Series s = sum_formula_numerator(N);
  s *= Rat(1, 2);
  for (int64_t i = 1; 8 * i <= N; ++i) s.mul_geometric({8 * i, 0}, Rat(1));
  for (int64_t i = 1; 4 * i <= N; ++i) s.mul_geometric({4 * i, 0}, Rat(-1));
  return s * identityR_lhs(N);
}

Series char_fock_sum_formula(int64_t N) {
  Series s = sum_formula_numerator(N);
  s *= Rat(1, 2);
  for (int64_t l = 1; 8 * l <= N; ++l) {
    s.mul_geometric({8 * l, 0}, Rat(1));
    s.mul_geometric({8 * l, 0}, Rat(1));
  }
  return s * identityR_lhs(N);
}

namespace {

// Module factor of a twisted irreducible: prod 1/(1 - q^{2n-1} t^{(2n-1)/2}).
Series qt_module_factor(int64_t N) {
  Series s = Series::one(kQT, window_qt(N));
  for (int64_t o = 1; 2 * o <= N; o += 2) s.mul_geometric({2 * o, o}, Rat(1));
  return s;
}

// Module factor of an untwisted irreducible: prod 1/(1 - q^{2n} r^n).
Series qzr_module_factor(int64_t N) {
  Series s = Series::one(kQZR, window_qzr(N));
  for (int64_t n = 1; 4 * n <= N; ++n) s.mul_geometric({4 * n, 0, 2 * n}, Rat(1));
  return s;
}

}  // namespace

Series char_qt_from_counts(const HwvCounts& twisted_counts, int64_t N) {
  Series tops(kQT, window_qt(N));
  for (const auto& [d2, count] : twisted_counts.by_degree2)
    if (d2 <= N) tops.add_term({d2, 0}, Rat(count));
  return tops * qt_module_factor(N);
}

Series char_qt_odp(int64_t N) {
  Series tops(kQT, window_qt(N));
  auto counts = odp_counts(N);
  for (int64_t w2 = 0; w2 <= N; ++w2)
    if (counts[w2] != 0) tops.add_term({w2, 0}, Rat(counts[w2]));
  return tops * qt_module_factor(N);
}

Series char_qt_eigen(int64_t N) {
  Series s(kQT, window_qt(N));
  for (int64_t d2 = 0; d2 <= N; ++d2) {
    for (const auto& rec : eigenbasis(Algebra::twisted, d2)) {
      // deg is the 2L_0 eigenvalue (u exponent = 2 deg = d2); t exponent is
      // the doubled L^t_0 eigenvalue.
      Rat t2 = rec.lt0 * 2;
      if (t2.get_den() != 1) throw std::runtime_error("char_qt_eigen: non-half-integer L^t_0");
      s.add_term({d2, t2.get_num().get_si()}, Rat(1));
    }
  }
  return s;
}

Series char_triple_from_counts(const HwvCounts& untwisted_counts, int64_t N) {
  Series tops(kQZR, window_qzr(N));
  for (const auto& [key, count] : untwisted_counts.by_degree2_charge) {
    const auto& [d2, c] = key;
    if (d2 <= N) tops.add_term({d2, 2 * c, -int64_t(c) * c}, Rat(count));
  }
  return tops * qzr_module_factor(N);
}

Series char_triple_bpdi(int64_t N) {
  Series tops(kQZR, window_qzr(N));
  for (const auto& bp : enumerate_bpdi(N)) {
    int64_t b = birank(bp);
    tops.add_term({weight_W2(bp), 2 * b, -b * b}, Rat(1));
  }
  return tops * qzr_module_factor(N);
}

Series char_triple_eigen(int64_t N) {
  Series s(kQZR, window_qzr(N));
  for (int64_t d2 = 0; d2 <= N; ++d2) {
    for (const auto& rec : eigenbasis(Algebra::untwisted, d2)) {
      Rat r2 = rec.lh0 * 2;
      if (r2.get_den() != 1) throw std::runtime_error("char_triple_eigen: non-half-integer L^h_0");
      s.add_term({d2, 2 * rec.charge, r2.get_num().get_si()}, Rat(1));
    }
  }
  return s;
}

Series crank_gf_from_table(const CrankTable& table, int64_t N) {
  Series s(kQZ, window_qz(N));
  for (int32_t n = 0; 2 * n <= N; ++n)
    for (int32_t m = -n - 1; m <= n + 1; ++m) {
      int64_t c = table.count(m, n);
      if (c != 0) s.add_term({2 * n, 2 * m}, Rat(c));
    }
  return s;
}

Series crank_gf_product(int64_t N) {
  Series s = Series::one(kQZ, window_qz(N));
  for (int64_t n = 1; 2 * n <= N; ++n) {
    s.mul_one_minus({2 * n, 0}, Rat(1));
    s.mul_geometric({2 * n, 2}, Rat(1));
    s.mul_geometric({2 * n, -2}, Rat(1));
  }
  return s;
}

Series crank_substituted_sum(const CrankTable& table, int64_t N) {
  Series s(kQZ, window_qz(N));
  for (int32_t n = 0; 3 * n <= N; ++n) {
    for (int32_t c = -n - 1; c <= n + 1; ++c) {
      int64_t cnt = table.count(c, n);
      if (cnt == 0) continue;
      for (int64_t l = 0; 4 * n + c + l <= N; ++l) {
        int64_t u = 4 * n + c + l;
        if (u < 0) continue;
        s.add_term({u, 2 * (c + l)}, Rat(cnt));
      }
    }
  }
  return s;
}

Series jacobi_triangular_sum(int64_t N) {
  Series s(kQ, window_q(N));
  for (int64_t m = 0; 4 * triangular(m) <= N; ++m) s.add_term({4 * triangular(m)}, Rat(1));
  return s;
}

Series jacobi_triangular_product(int64_t N) {
  Series s = Series::one(kQ, window_q(N));
  for (int64_t i = 1; 8 * i <= N; ++i) s.mul_one_minus({8 * i}, Rat(1));
  for (int64_t i = 1; 4 * i <= N; ++i) s.mul_one_minus({4 * i}, Rat(-1));
  return s;
}

}  // namespace ckp
