// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ckp/rational.hpp"

namespace ckp {

// --- exact dense elimination over Q (reference path) ---

// Row-reduces in place to reduced row echelon form; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Rat>>& rows);

// Kernel basis of the matrix (rows x cols), echelonized against the column
// order: each vector has leading coordinate 1 at a distinct free column.
std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> rows, size_t cols);

size_t rank(std::vector<std::vector<Rat>> rows);

// --- modular arithmetic (certified-kernel fast path) ---

// Fixed 61-bit prime; arithmetic via 128-bit products.
inline constexpr uint64_t kPrime0 = (uint64_t(1) << 61) - 1;  // Mersenne, prime

bool is_prime_u64(uint64_t n);

// Deterministic list of 61-bit primes: kPrime0, then successive primes below
// it. Used for CRT lifts; index 0 is always kPrime0.
uint64_t crt_prime(int index);

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return uint64_t((unsigned __int128)a * b % p);
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p);
inline uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a % p, p - 2, p); }
inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

// Reduction of an exact rational mod p; nullopt when the denominator vanishes.
std::optional<uint64_t> rat_mod(const Rat& r, uint64_t p);

// Rational reconstruction of residue mod modulus into num/den with
// |num|, den <= sqrt(modulus/2); nullopt if none exists.
std::optional<Rat> rational_reconstruct(const mpz_class& residue, const mpz_class& modulus);

// Sparse matrix mod p, stored column-wise.
struct SparseColsModP {
  uint64_t p = kPrime0;
  int rows = 0;
  // cols[j] = list of (row, value)
  std::vector<std::vector<std::pair<int, uint64_t>>> cols;
};

// Kernel basis mod p of a dense matrix (rows x cols), echelonized: each kernel
// vector has value 1 at one free column and 0 at the other free columns.
// Returns the kernel vectors as dense columns, plus the matrix rank.
struct ModKernel {
  std::vector<std::vector<uint64_t>> basis;
  size_t rank = 0;
};
ModKernel kernel_modp(std::vector<std::vector<uint64_t>> rows, size_t cols, uint64_t p);

}  // namespace ckp
