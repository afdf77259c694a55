// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ckp/rational.hpp"

namespace ckp {

// Strictly decreasing positive half-odd parts, stored doubled (odd,
// descending). The ODP indexing family.
struct HalfOddPartition {
  std::vector<int32_t> parts2;
  int64_t weight2() const;
};

// A triangular part T_m plus a distinct half-odd tail. The P_tdo family;
// T_0 = 0 is allowed and the element is determined by (m, tail).
struct TriangularPartition {
  int32_t m = 0;
  HalfOddPartition tail;
  int64_t weight2() const;
};

// Pair of strictly decreasing positive-integer partitions; the same integer
// may occur in both components.
struct Bipartition {
  std::vector<int32_t> pi1;
  std::vector<int32_t> pi2;
};

int64_t triangular(int64_t m);

// Hammond-Lewis birank #pi2 - #pi1.
int32_t birank(const Bipartition& bp);

// Weight map W(bp) = 2|bp| + 2ns - n(2n-1)/2 - s(2s+1)/2, returned doubled.
// Throws std::invalid_argument on malformed bipartitions.
int64_t weight_W2(const Bipartition& bp);

// Complete enumerations by weight; vectors indexed by doubled weight.
std::vector<std::vector<HalfOddPartition>> enumerate_odp(int64_t max_weight2);
std::vector<std::vector<TriangularPartition>> enumerate_ptdo(int64_t max_weight2);

std::vector<int64_t> odp_counts(int64_t max_weight2);
std::vector<int64_t> ptdo_counts(int64_t max_weight2);

// All distinct integer bipartitions with W(bp) <= max_W2 (doubled bound).
// Completeness relies on the monotone bound min W at fixed part counts
// (n, s) = 3n/2 + s/2 + 2ns, attained by the two staircases.
std::vector<Bipartition> enumerate_bpdi(int64_t max_W2);

// --- Dyson crank ---

// Crank of an integer partition (weakly decreasing positive parts).
int32_t crank(const std::vector<int32_t>& lambda);

// N'(m, n) for all n <= max_n, computed from the definition, with the n = 1
// exception N'(-1,1) = -N'(0,1) = N'(1,1) = 1 imposed.
class CrankTable {
 public:
  explicit CrankTable(int32_t max_n);
  int32_t max_n() const { return max_n_; }
  // Zero outside the computed range and for non-integer arguments by
  // convention; callers must keep n <= max_n.
  int64_t count(int32_t m, int32_t n) const;

 private:
  int32_t max_n_;
  std::map<std::pair<int32_t, int32_t>, int64_t> counts_;
};

// Number of highest weight vectors of degree n (doubled: deg2) and charge m,
// via the crank: sum_{l>=0} N'(m-l, (2n-m)/4); zero when (2n-m)/4 is not a
// nonnegative integer.
int64_t hwv_count_via_crank(const CrankTable& table, int64_t deg2, int32_t m);

}  // namespace ckp
