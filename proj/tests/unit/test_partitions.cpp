// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <set>

#include "ckp/partitions.hpp"

using namespace ckp;

TEST_CASE("ODP and P_tdo counts at low weight") {
  auto odp = odp_counts(13);
  // weights 0, 1/2, 1, 3/2, 2, 5/2 -> 1, 1, 0, 1, 1, 1
  CHECK(odp[0] == 1);
  CHECK(odp[1] == 1);
  CHECK(odp[2] == 0);
  CHECK(odp[3] == 1);
  CHECK(odp[4] == 1);
  CHECK(odp[5] == 1);
  auto ptdo = ptdo_counts(13);
  // weights 0 .. 3 -> 1, 1, 1, 2, 1, 2, 3
  std::vector<int64_t> expect{1, 1, 1, 2, 1, 2, 3};
  for (size_t i = 0; i < expect.size(); ++i) CHECK(ptdo[i] == expect[i]);
  // weight 13/2 -> 7 partitions
  CHECK(ptdo[13] == 7);
  // weight 0 is exactly the empty partition
  auto e = enumerate_ptdo(0);
  REQUIRE(e[0].size() == 1);
  CHECK(e[0][0].m == 0);
  CHECK(e[0][0].tail.parts2.empty());
}

TEST_CASE("ODP generating function") {
  // sum q^{|p|} = prod (1 + q^{(2n-1)/2}): check coefficients by brute force.
  auto odp = odp_counts(20);
  std::vector<int64_t> coeffs(21, 0);
  coeffs[0] = 1;
  for (int64_t part = 1; part <= 19; part += 2) {
    for (int64_t w = 20; w >= part; --w) coeffs[w] += coeffs[w - part];
  }
  for (int64_t w = 0; w <= 20; ++w) CHECK(odp[w] == coeffs[w]);
}

TEST_CASE("weight map W") {
  CHECK(weight_W2(Bipartition{{1}, {}}) == 3);   // W = 3/2
  CHECK(weight_W2(Bipartition{{}, {1}}) == 1);   // W = 1/2
  CHECK(weight_W2(Bipartition{{1}, {1}}) == 8);  // W = 4
  CHECK(weight_W2(Bipartition{{}, {}}) == 0);
  CHECK(weight_W2(Bipartition{{}, {3, 2, 1}}) == 3);        // W = 3/2
  CHECK(weight_W2(Bipartition{{}, {4, 3, 2, 1}}) == 4);     // W = 2
  CHECK(birank(Bipartition{{1}, {}}) == -1);
  CHECK(birank(Bipartition{{}, {4, 3, 2, 1}}) == 4);
  CHECK_THROWS_AS(weight_W2(Bipartition{{1, 1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(weight_W2(Bipartition{{0}, {}}), std::invalid_argument);
}

TEST_CASE("BP_DI enumeration is complete and counted by P_tdo") {
  auto bps = enumerate_bpdi(13);
  std::vector<int64_t> by_weight(14, 0);
  std::set<std::pair<std::vector<int32_t>, std::vector<int32_t>>> seen;
  for (const auto& bp : bps) {
    int64_t w2 = weight_W2(bp);
    REQUIRE(w2 <= 13);
    ++by_weight[w2];
    CHECK(seen.insert({bp.pi1, bp.pi2}).second);  // duplicate-free
  }
  auto ptdo = ptdo_counts(13);
  for (int64_t w2 = 0; w2 <= 13; ++w2) CHECK(by_weight[w2] == ptdo[w2]);

  // W = 3/2: exactly ((1)|-) and (-|(3,2,1)).
  std::set<std::pair<std::vector<int32_t>, std::vector<int32_t>>> w3;
  for (const auto& bp : bps)
    if (weight_W2(bp) == 3) w3.insert({bp.pi1, bp.pi2});
  CHECK(w3 ==
        decltype(w3){{{1}, {}}, {{}, {3, 2, 1}}});
  // W = 2: only (-|(4,3,2,1)).
  std::set<std::pair<std::vector<int32_t>, std::vector<int32_t>>> w2set;
  for (const auto& bp : bps)
    if (weight_W2(bp) == 4) w2set.insert({bp.pi1, bp.pi2});
  CHECK(w2set == decltype(w2set){{{}, {4, 3, 2, 1}}});
  // W = 4: ((1)|(1)), (-|(5,3,2,1)) and the staircase (-|(8,...,1)).
  std::set<std::pair<std::vector<int32_t>, std::vector<int32_t>>> w8;
  for (const auto& bp : bps)
    if (weight_W2(bp) == 8) w8.insert({bp.pi1, bp.pi2});
  CHECK(w8 == decltype(w8){{{1}, {1}},
                           {{}, {5, 3, 2, 1}},
                           {{}, {8, 7, 6, 5, 4, 3, 2, 1}}});

  // mod-4 congruence: 2W = birank (mod 4); doubled W is exactly 2W.
  for (const auto& bp : bps) {
    int64_t w = weight_W2(bp);
    CHECK((((w - birank(bp)) % 4) + 4) % 4 == 0);
  }
}

TEST_CASE("crank") {
  CHECK(crank({2}) == 2);
  CHECK(crank({1, 1}) == -2);
  CHECK(crank({}) == 0);
  CHECK(crank({3, 1}) == 0);
  CHECK(crank({2, 1, 1}) == -2);
  CrankTable table(8);
  CHECK(table.count(0, 0) == 1);
  CHECK(table.count(1, 0) == 0);
  CHECK(table.count(-1, 1) == 1);
  CHECK(table.count(0, 1) == -1);
  CHECK(table.count(1, 1) == 1);
  // n = 4: cranks 4, 2, 0, -2, -4, one partition each.
  for (int32_t m : {-4, -2, 0, 2, 4}) CHECK(table.count(m, 4) == 1);
  CHECK(table.count(1, 4) == 0);
}

TEST_CASE("hwv counts via crank") {
  CrankTable table(12);
  CHECK(hwv_count_via_crank(table, 3, 3) == 1);
  CHECK(hwv_count_via_crank(table, 3, -1) == 1);
  CHECK(hwv_count_via_crank(table, 3, 1) == 0);   // (2n-m)/4 not integral
  CHECK(hwv_count_via_crank(table, 3, 2) == 0);
  // Degree 13/2: nonzero counts exactly {13:1, 9:1, 5:2, 1:2, -3:1}.
  std::map<int32_t, int64_t> nonzero;
  for (int32_t m = -26; m <= 26; ++m) {
    int64_t c = hwv_count_via_crank(table, 13, m);
    if (c != 0) nonzero[m] = c;
  }
  std::map<int32_t, int64_t> expect{{13, 1}, {9, 1}, {5, 2}, {1, 2}, {-3, 1}};
  CHECK(nonzero == expect);
}

TEST_CASE("triangular numbers") {
  CHECK(triangular(0) == 0);
  CHECK(triangular(1) == 1);
  CHECK(triangular(4) == 10);
}
