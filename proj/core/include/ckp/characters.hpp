// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ckp/hwv.hpp"
#include "ckp/partitions.hpp"
#include "ckp/series.hpp"

namespace ckp {

// Windows derived from the truncation order N (doubled q exponent). The
// auxiliary variables of the character identities are q-dominated: every
// occurrence carries enough positive u valuation that these bounds lose no
// term with u exponent <= N, so comparisons on them are exact.
Window window_q(int64_t N);
Window window_qz(int64_t N);
Window window_qt(int64_t N);
Window window_qzr(int64_t N);

inline const std::vector<std::string> kQ{"q"};
inline const std::vector<std::string> kQZ{"q", "z"};
inline const std::vector<std::string> kQT{"q", "t"};
inline const std::vector<std::string> kQZR{"q", "z", "r"};

// --- graded dimension of the whole Fock space ---

// Brute force: count basis monomials by degree.
Series char_dimq_bruteforce(int64_t N);
// Product side: 1 / prod (1 - q^{(2n-1)/2}).
Series char_dimq_product(int64_t N);

// --- (q, z) character tr q^{2L_0} z^{h^Z_0} ---

// Brute force over the monomial basis.
Series char_fock_bruteforce(int64_t N);
// prod 1/((1 - z q^{2j-3/2})(1 - z^{-1} q^{2j-1/2})).
Series char_fock_product(int64_t N);
// The sum-vs-product closed form for the full character.
Series char_fock_sum_formula(int64_t N);

// --- character of the untwisted highest-weight-vector space ---

Series char_hwv_from_counts(const HwvCounts& counts, int64_t N);
Series char_hwv_bpdi(int64_t N);
// prod (1-q^{2n}) / ((1 - z q^{2n-3/2})(1 - z^{-1} q^{2n-1/2})).
Series char_hwv_product(int64_t N);
// The sum-vs-product closed form for the hwv character.
Series char_hwv_sum_formula(int64_t N);

// The two sums shared by the closed forms:
// sum_k z^k q^{k/2}/(1+z^{-1}q^{2k+3/2}) + sum_k z^{-k} q^{3k/2}/(1+z q^{2k+1/2}).
Series identityR_lhs(int64_t N);
// 2 prod (1-q^{4l})^2 / ((1 - z^2 q^{4l-3})(1 - z^{-2} q^{4l-1})).
Series identityR_rhs(int64_t N);

// --- (q, t) trace tr q^{2L_0} t^{L^t_0} ---

Series char_qt_from_counts(const HwvCounts& twisted_counts, int64_t N);
Series char_qt_odp(int64_t N);
// Direct trace over the descendant eigenbasis with operator-applied
// eigenvalues; exponential in N, for cross-checks at small order.
Series char_qt_eigen(int64_t N);

// --- (q, z, r) trace tr q^{2L_0} z^{h^Z_0} r^{L^h_0} ---

Series char_triple_from_counts(const HwvCounts& untwisted_counts, int64_t N);
Series char_triple_bpdi(int64_t N);
Series char_triple_eigen(int64_t N);  // small order only

// --- Dyson crank ---

// sum N'(m,n) z^m q^n from the table (plain q: u exponent 2n).
Series crank_gf_from_table(const CrankTable& table, int64_t N);
// prod (1-q^n)/((1-z q^n)(1-z^{-1} q^n)).
Series crank_gf_product(int64_t N);
// sum_{n,m,l} N'(m-l,n) z^m q^{2n+m/2} (the q -> q^2, z -> z q^{1/2}
// substitution with the geometric resummation folded in).
Series crank_substituted_sum(const CrankTable& table, int64_t N);

// Jacobi: sum_m q^{2 T_m} and prod (1-q^{4i})(1+q^{2i}).
Series jacobi_triangular_sum(int64_t N);
Series jacobi_triangular_product(int64_t N);

}  // namespace ckp
