// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/dressed.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "ckp/heisenberg.hpp"
#include "ckp/modes.hpp"

namespace ckp {

namespace {

// Intermediate pipeline state: formal power of the expansion variable
// (z^2 for beta/gamma, z for chi) -> coefficient vector.
using PowState = std::map<int64_t, FockVector>;

int64_t max_degree2(const PowState& st) {
  int64_t d = 0;
  for (const auto& [p, v] : st) d = std::max(d, v.max_degree2());
  return d;
}

// Applies exp(sum_n coeff(n) Op_n x^{power(n)}) for a commuting family of
// lowering operators (power(n) < 0, Op_n drops the degree by drop2(n), so
// every factor terminates on finite vectors).
void apply_exp_lowering(PowState& st,
                        const std::function<FockVector(int64_t, const FockVector&)>& op,
                        const std::function<Rat(int64_t)>& coeff,
                        const std::function<int64_t(int64_t)>& power,
                        const std::function<int64_t(int64_t)>& drop2) {
  int64_t maxdeg2 = max_degree2(st);
  for (int64_t n = 1; drop2(n) <= maxdeg2; ++n) {
    PowState add;
    for (const auto& [p, vec] : st) {
      FockVector cur = vec;
      Rat fc(1);
      for (int64_t j = 1; !cur.is_zero(); ++j) {
        cur = op(n, cur);
        if (cur.is_zero()) break;
        fc *= coeff(n) / Rat(j);
        add[p + j * power(n)] += fc * cur;
      }
    }
    for (auto& [p, v] : add) st[p] += v;
  }
}

// Raising counterpart: powers capped at pmax, which bounds both the factor
// index and the per-factor expansion depth.
void apply_exp_raising(PowState& st,
                       const std::function<FockVector(int64_t, const FockVector&)>& op,
                       const std::function<Rat(int64_t)>& coeff,
                       const std::function<int64_t(int64_t)>& power, int64_t pmax) {
  if (st.empty()) return;
  for (int64_t n = 1;; ++n) {
    int64_t pw = power(n);
    int64_t pmin = st.begin()->first;
    if (pmin + pw > pmax) break;
    PowState add;
    for (const auto& [p, vec] : st) {
      if (p + pw > pmax) continue;
      FockVector cur = vec;
      Rat fc(1);
      for (int64_t j = 1; p + j * pw <= pmax; ++j) {
        cur = op(n, cur);
        if (cur.is_zero()) break;
        fc *= coeff(n) / Rat(j);
        add[p + j * pw] += fc * cur;
      }
    }
    for (auto& [p, v] : add) st[p] += v;
  }
}

FockVector untwisted_heis_op(int64_t n, const FockVector& v) {
  return heis_untwisted(int32_t(n), v);
}
FockVector untwisted_heis_op_neg(int64_t n, const FockVector& v) {
  return heis_untwisted(int32_t(-n), v);
}

// Shared beta/gamma pipeline; beta_side selects signs, mode class, and the
// direction of the z^{+-2 h^Z_0} power bookkeeping.
FockVector dressed_beta_gamma(bool beta_side, int64_t k, const FockVector& v) {
  int64_t target = -k - 1;
  PowState st;
  st[0] = v;

  // Trailing exponential in the annihilation modes:
  // beta: V^-(z)^{-1} = exp(+sum (1/n) h^Z_n z^{-2n}),
  // gamma: V^-(z)   = exp(-sum (1/n) h^Z_n z^{-2n}).
  apply_exp_lowering(
      st, untwisted_heis_op,
      [&](int64_t n) { return beta_side ? Rat(1, n) : Rat(-1, n); },
      [](int64_t n) { return -n; }, [](int64_t n) { return 4 * n; });

  // z^{-+2 h^Z_0}: shift each charge-c component by -+c powers of z^2.
  {
    PowState shifted;
    for (const auto& [p, vec] : st) {
      for (const auto& [m, c] : vec.terms()) {
        int64_t q = beta_side ? p - m.charge() : p + m.charge();
        shifted[q].add_term(m, c);
      }
    }
    st = std::move(shifted);
  }

  // Middle mode sum: beta_k = chi_{2k+1/2} (doubled 4k+1) at (z^2)^{-k-1},
  // gamma_k = chi_{2k+3/2} (doubled 4k+3).
  {
    PowState out;
    int64_t off = beta_side ? 1 : 3;
    for (const auto& [p, vec] : st) {
      int64_t kmax = (vec.max_degree2() - off) / 4 + 1;
      for (int64_t kk = p - target - 1; kk <= kmax; ++kk) {
        FockVector w = apply_mode(HalfOdd(int32_t(4 * kk + off)), vec);
        if (!w.is_zero()) out[p - kk - 1] += w;
      }
    }
    st = std::move(out);
  }

  // Leading exponential in the creation modes:
  // beta: V^+(z)^{-1} = exp(-sum (1/n) h^Z_{-n} z^{2n}),
  // gamma: V^+(z)    = exp(+sum (1/n) h^Z_{-n} z^{2n}).
  apply_exp_raising(
      st, untwisted_heis_op_neg,
      [&](int64_t n) { return beta_side ? Rat(-1, n) : Rat(1, n); },
      [](int64_t n) { return n; }, target);

  auto it = st.find(target);
  return it == st.end() ? FockVector() : it->second;
}

}  // namespace

FockVector dressed_beta(int64_t k, const FockVector& v) { return dressed_beta_gamma(true, k, v); }

FockVector dressed_gamma(int64_t k, const FockVector& v) {
  return dressed_beta_gamma(false, k, v);
}

FockVector dressed_chi(HalfOdd n, const FockVector& v) {
  // Target power of z: -n - 1/2, an integer.
  //
  // Sign convention: the exponents are exp(+sum (2/o) h^t_{o/2} z^{-o}) on the
  // annihilation side and exp(-sum (2/o) h^t_{-o/2} z^{o}) on the creation
  // side. This is the unique choice for which the dressed modes commute with
  // the whole twisted Heisenberg action (pinned by tests), which is what makes
  // them act within the highest-weight-vector space.
  int64_t target = -(n.twice() + 1) / 2;
  PowState st;
  st[0] = v;

  apply_exp_lowering(
      st,
      [](int64_t n, const FockVector& w) { return heis_twisted(HalfOdd(int32_t(2 * n - 1)), w); },
      [](int64_t n) { return Rat(2, 2 * n - 1); }, [](int64_t n) { return -(2 * n - 1); },
      [](int64_t n) { return 2 * (2 * n - 1); });

  // chi(z) = sum_m chi_m z^{-m-1/2}: power p - (m2+1)/2 must stay <= target.
  {
    PowState out;
    for (const auto& [p, vec] : st) {
      int64_t lo = 2 * (p - target) - 1;
      int64_t hi = vec.max_degree2();
      for (int64_t m2 = lo; m2 <= hi; m2 += 2) {
        FockVector w = apply_mode(HalfOdd(int32_t(m2)), vec);
        if (!w.is_zero()) out[p - (m2 + 1) / 2] += w;
      }
    }
    st = std::move(out);
  }

  apply_exp_raising(
      st,
      [](int64_t n, const FockVector& w) {
        return heis_twisted(HalfOdd(int32_t(-(2 * n - 1))), w);
      },
      [](int64_t n) { return Rat(-2, 2 * n - 1); }, [](int64_t n) { return 2 * n - 1; }, target);

  auto it = st.find(target);
  return it == st.end() ? FockVector() : it->second;
}

FockVector dressed_mode(const DressedOperator& op, const FockVector& v) {
  switch (op.kind) {
    case DressedOperator::Kind::beta:
      return dressed_beta(op.mode, v);
    case DressedOperator::Kind::gamma:
      return dressed_gamma(op.mode, v);
    case DressedOperator::Kind::chi:
      return dressed_chi(op.chi_mode, v);
  }
  return {};
}

FockVector hwv_from_bipartition(const Bipartition& bp) {
  weight_W2(bp);  // validates both components
  FockVector v = FockVector::vacuum();
  for (auto it = bp.pi2.rbegin(); it != bp.pi2.rend(); ++it) v = dressed_gamma(-*it, v);
  for (auto it = bp.pi1.rbegin(); it != bp.pi1.rend(); ++it) v = dressed_beta(-*it, v);
  return v;
}

FockVector twisted_hwv_from_partition(const HalfOddPartition& p) {
  for (size_t i = 1; i < p.parts2.size(); ++i)
    if (p.parts2[i - 1] <= p.parts2[i])
      throw std::invalid_argument("twisted_hwv_from_partition: parts must strictly decrease");
  FockVector v = FockVector::vacuum();
  for (auto it = p.parts2.rbegin(); it != p.parts2.rend(); ++it)
    v = dressed_chi(HalfOdd(-*it), v);
  return v;
}

}  // namespace ckp
