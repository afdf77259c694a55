// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ckp/fock_vector.hpp"
#include "ckp/half_odd.hpp"
#include "ckp/partitions.hpp"

namespace ckp {

// Modes of the dressed fields acting on the Fock space:
//
//   H^beta(z^2)  = V^+(z)^{-1} beta_chi(z^2) z^{-2 h^Z_0} V^-(z)^{-1}
//   H^gamma(z^2) = V^+(z) gamma_chi(z^2) z^{+2 h^Z_0} V^-(z)
//   H^chi(z)     = V_t^+(z)^{-1} chi(z) V_t^-(z)^{-1}
//
// with chi(z) = gamma_chi(z^2) + z beta_chi(z^2) splitting the modes by index
// class: beta_k = chi_{2k+1/2}, gamma_k = chi_{2k+3/2}. Mode extraction is
// exact: the lowering exponentials terminate by degree, the raising ones by
// the requested output power.
//
// Indexing: H^beta_{(k)} is the coefficient of (z^2)^{-k-1} in H^beta(z^2)
// (H^gamma likewise); H^chi_{(n)} the coefficient of z^{-n-1/2} in H^chi(z),
// n half-odd, annihilation for n > 0.

FockVector dressed_beta(int64_t k, const FockVector& v);
FockVector dressed_gamma(int64_t k, const FockVector& v);
FockVector dressed_chi(HalfOdd n, const FockVector& v);

struct DressedOperator {
  enum class Kind { beta, gamma, chi };
  Kind kind = Kind::beta;
  int64_t mode = 0;       // beta/gamma
  HalfOdd chi_mode{1};    // chi
};
FockVector dressed_mode(const DressedOperator& op, const FockVector& v);

// The highest weight vector assigned to a distinct integer bipartition:
// H^beta_{(-m_k)} ... H^beta_{(-m_1)} H^gamma_{(-n_s)} ... H^gamma_{(-n_1)} |0>.
// Its charge equals the Hammond-Lewis birank and its degree equals W(bp).
FockVector hwv_from_bipartition(const Bipartition& bp);

// The twisted analogue: H^chi_{(-n_s)} ... H^chi_{(-n_1)} |0> for a strictly
// decreasing half-odd partition (parts doubled, descending).
FockVector twisted_hwv_from_partition(const HalfOddPartition& p);

}  // namespace ckp
