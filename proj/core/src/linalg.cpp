// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>

namespace ckp {

std::vector<int> rref(std::vector<std::vector<Rat>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  size_t cols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && is_zero(rows[sel][c])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rat inv = Rat(1) / rows[r][c];
    for (size_t k = c; k < cols; ++k) rows[r][k] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      Rat f = rows[i][c];
      for (size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(int(c));
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> rows, size_t cols) {
  std::vector<int> pivots = rref(rows);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> kernel;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

size_t rank(std::vector<std::vector<Rat>> rows) { return rref(rows).size(); }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t crt_prime(int index) {
  static std::vector<uint64_t> primes{kPrime0};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (int(primes.size()) <= index) {
    uint64_t c = primes.back() - 2;
    while (!is_prime_u64(c)) c -= 2;
    primes.push_back(c);
  }
  return primes[index];
}

std::optional<uint64_t> rat_mod(const Rat& r, uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class num = r.get_num() % pz;
  mpz_class den = r.get_den() % pz;
  if (den == 0) return std::nullopt;
  uint64_t n = mpz_class(num < 0 ? num + pz : num).get_ui();
  uint64_t d = den.get_ui();
  return mulmod(n, invmod(d, p), p);
}

std::optional<Rat> rational_reconstruct(const mpz_class& residue, const mpz_class& modulus) {
  // Half-extended Euclid: stop when the remainder drops below sqrt(m/2).
  mpz_class bound = sqrt(modulus / 2);
  mpz_class r0 = modulus, r1 = ((residue % modulus) + modulus) % modulus;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  if (gcd(r1, t1) != 1) return std::nullopt;
  Rat out(r1, t1);
  out.canonicalize();
  return out;
}

ModKernel kernel_modp(std::vector<std::vector<uint64_t>> rows, size_t cols, uint64_t p) {
  std::vector<int> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    uint64_t inv = invmod(rows[r][c], p);
    for (size_t k = c; k < cols; ++k) rows[r][k] = mulmod(rows[r][k], inv, p);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      uint64_t f = rows[i][c];
      for (size_t k = c; k < cols; ++k) rows[i][k] = submod(rows[i][k], mulmod(f, rows[r][k], p), p);
    }
    pivots.push_back(int(c));
    ++r;
  }
  ModKernel out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<uint64_t> v(cols, 0);
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = rows[i][f] == 0 ? 0 : p - rows[i][f];
    out.basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace ckp
