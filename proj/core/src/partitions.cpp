// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace ckp {

int64_t HalfOddPartition::weight2() const {
  int64_t w = 0;
  for (int32_t p : parts2) w += p;
  return w;
}

int64_t TriangularPartition::weight2() const { return 2 * triangular(m) + tail.weight2(); }

int64_t triangular(int64_t m) { return m * (m + 1) / 2; }

int32_t birank(const Bipartition& bp) { return int32_t(bp.pi2.size()) - int32_t(bp.pi1.size()); }

namespace {

void check_component(const std::vector<int32_t>& pi) {
  for (size_t i = 0; i < pi.size(); ++i) {
    if (pi[i] <= 0) throw std::invalid_argument("bipartition parts must be positive");
    if (i > 0 && pi[i - 1] <= pi[i])
      throw std::invalid_argument("bipartition parts must be strictly decreasing");
  }
}

int64_t sum_of(const std::vector<int32_t>& v) {
  int64_t s = 0;
  for (int32_t x : v) s += x;
  return s;
}

}  // namespace

int64_t weight_W2(const Bipartition& bp) {
  check_component(bp.pi1);
  check_component(bp.pi2);
  int64_t n = int64_t(bp.pi1.size()), s = int64_t(bp.pi2.size());
  int64_t total = sum_of(bp.pi1) + sum_of(bp.pi2);
  // W = 2|bp| + 2ns - n(2n-1)/2 - s(2s+1)/2, doubled here.
  return 4 * total + 4 * n * s - n * (2 * n - 1) - s * (2 * s + 1);
}

std::vector<std::vector<HalfOddPartition>> enumerate_odp(int64_t max_weight2) {
  std::vector<std::vector<HalfOddPartition>> out(max_weight2 + 1);
  std::vector<int32_t> acc;
  // Distinct half-odd parts, descending.
  auto rec = [&](auto&& self, int64_t remaining2, int32_t max_part2) -> void {
    out[max_weight2 - remaining2].push_back(HalfOddPartition{acc});
    int32_t start = int32_t(std::min<int64_t>(max_part2, remaining2));
    if (start % 2 == 0) --start;
    for (int32_t p2 = start; p2 >= 1; p2 -= 2) {
      acc.push_back(p2);
      self(self, remaining2 - p2, p2 - 2);
      acc.pop_back();
    }
  };
  rec(rec, max_weight2, max_weight2 % 2 == 0 ? max_weight2 - 1 : max_weight2);
  // rec records each partition at weight2 = max_weight2 - remaining2.
  return out;
}

std::vector<std::vector<TriangularPartition>> enumerate_ptdo(int64_t max_weight2) {
  auto odp = enumerate_odp(max_weight2);
  std::vector<std::vector<TriangularPartition>> out(max_weight2 + 1);
  for (int32_t m = 0; 2 * triangular(m) <= max_weight2; ++m) {
    int64_t t2 = 2 * triangular(m);
    for (int64_t w2 = 0; w2 + t2 <= max_weight2; ++w2)
      for (const auto& tail : odp[w2]) out[w2 + t2].push_back(TriangularPartition{m, tail});
  }
  return out;
}

std::vector<int64_t> odp_counts(int64_t max_weight2) {
  auto e = enumerate_odp(max_weight2);
  std::vector<int64_t> c(e.size());
  for (size_t i = 0; i < e.size(); ++i) c[i] = int64_t(e[i].size());
  return c;
}

std::vector<int64_t> ptdo_counts(int64_t max_weight2) {
  auto e = enumerate_ptdo(max_weight2);
  std::vector<int64_t> c(e.size());
  for (size_t i = 0; i < e.size(); ++i) c[i] = int64_t(e[i].size());
  return c;
}

namespace {

// Distinct partitions with exactly k positive parts and given weight,
// descending part lists.
void distinct_with_parts(int64_t weight, int32_t k, int32_t max_part, std::vector<int32_t>& acc,
                         std::vector<std::vector<int32_t>>& out) {
  if (k == 0) {
    if (weight == 0) out.push_back(acc);
    return;
  }
  // Remaining k parts are distinct and >= 1, so need weight >= T_k and the
  // next part p satisfies p >= ceil over the staircase bound.
  for (int32_t p = std::min<int64_t>(max_part, weight - triangular(k - 1)); p >= k; --p) {
    acc.push_back(p);
    distinct_with_parts(weight - p, k - 1, p - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Bipartition> enumerate_bpdi(int64_t max_W2) {
  std::vector<Bipartition> out;
  // Minimal doubled W at fixed part counts (n, s) is 3n + s + 4ns (staircases).
  for (int64_t n = 0; 3 * n <= max_W2; ++n) {
    for (int64_t s = 0; 3 * n + s + 4 * n * s <= max_W2; ++s) {
      // W2 = 4|bp| + 4ns - n(2n-1) - s(2s+1); solve for the admissible |bp|.
      int64_t base = 4 * n * s - n * (2 * n - 1) - s * (2 * s + 1);
      int64_t min_total = triangular(n) + triangular(s);
      for (int64_t total = min_total; 4 * total + base <= max_W2; ++total) {
        for (int64_t w1 = triangular(n); w1 <= total - triangular(s); ++w1) {
          std::vector<std::vector<int32_t>> p1s, p2s;
          std::vector<int32_t> acc;
          distinct_with_parts(w1, int32_t(n), int32_t(w1), acc, p1s);
          distinct_with_parts(total - w1, int32_t(s), int32_t(total - w1), acc, p2s);
          for (const auto& a : p1s)
            for (const auto& b : p2s) out.push_back(Bipartition{a, b});
        }
      }
    }
  }
  return out;
}

int32_t crank(const std::vector<int32_t>& lambda) {
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) throw std::invalid_argument("crank: parts must be positive");
    if (i > 0 && lambda[i - 1] < lambda[i])
      throw std::invalid_argument("crank: parts must be weakly decreasing");
  }
  int32_t largest = lambda.empty() ? 0 : lambda[0];
  int32_t omega = 0;
  for (int32_t p : lambda)
    if (p == 1) ++omega;
  if (omega == 0) return largest;
  int32_t mu = 0;
  for (int32_t p : lambda)
    if (p > omega) ++mu;
  return mu - omega;
}

CrankTable::CrankTable(int32_t max_n) : max_n_(max_n) {
  // Enumerate all partitions of each n and classify by crank.
  std::vector<int32_t> acc;
  auto rec = [&](auto&& self, int32_t remaining, int32_t max_part) -> void {
    int32_t n = 0;
    for (int32_t p : acc) n += p;
    counts_[{crank(acc), n}]++;
    for (int32_t p = std::min(remaining, max_part); p >= 1; --p) {
      acc.push_back(p);
      self(self, remaining - p, p);
      acc.pop_back();
    }
  };
  rec(rec, max_n, max_n);
  // The n = 1 exceptional row.
  if (max_n >= 1) {
    counts_.erase({1, 1});  // the unique partition (1) has crank -1 by the case split
    counts_.erase({-1, 1});
    counts_[{-1, 1}] = 1;
    counts_[{0, 1}] = -1;
    counts_[{1, 1}] = 1;
  }
}

int64_t CrankTable::count(int32_t m, int32_t n) const {
  if (n < 0 || n > max_n_) return 0;
  auto it = counts_.find({m, n});
  return it == counts_.end() ? 0 : it->second;
}

int64_t hwv_count_via_crank(const CrankTable& table, int64_t deg2, int32_t m) {
  int64_t num = deg2 - m;  // = 2n - m
  if (num < 0 || num % 4 != 0) return 0;
  int64_t k = num / 4;
  if (k > table.max_n()) throw std::invalid_argument("hwv_count_via_crank: crank table too small");
  int64_t total = 0;
  for (int64_t l = 0; m - l >= -k; ++l) total += table.count(int32_t(m - l), int32_t(k));
  return total;
}

}  // namespace ckp
