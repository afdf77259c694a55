// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/hwv.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ckp/heisenberg.hpp"
#include "ckp/linalg.hpp"
#include "ckp/modes.hpp"

namespace ckp {

namespace {

// Doubled degree drop of the k-th positive annihilation mode (k = 0, 1, ...):
// untwisted h^Z_{k+1} drops 2(k+1), twisted h^t_{(2k+1)/2} drops 2k+1.
int64_t mode_drop2(Algebra alg, int k) {
  return alg == Algebra::untwisted ? 4LL * (k + 1) : 2LL * (2 * k + 1);
}

FockVector apply_annihilation(Algebra alg, int k, const FockVector& v) {
  if (alg == Algebra::untwisted) return heis_untwisted(k + 1, v);
  return heis_twisted(HalfOdd(2 * k + 1), v);
}

int num_constraints(Algebra alg, int64_t degree2) {
  int n = 0;
  while (mode_drop2(alg, n) <= degree2) ++n;
  return n;
}

// Block key: charge for the untwisted algebra (constraints preserve charge),
// charge parity for the twisted one (constraints shift charge by 0 or +-2).
int32_t block_key(Algebra alg, const FockMonomial& m) {
  return alg == Algebra::untwisted ? m.charge() : ((m.charge() % 2) + 2) % 2;
}

std::vector<FockMonomial> block_monomials(Algebra alg, int64_t d2, int32_t key) {
  std::vector<FockMonomial> out;
  for (auto& m : monomials_of_degree(d2))
    if (block_key(alg, m) == key) out.push_back(std::move(m));
  return out;
}

std::vector<int32_t> block_keys(Algebra alg, int64_t d2) {
  std::vector<int32_t> keys;
  for (const auto& m : monomials_of_degree(d2)) {
    int32_t k = block_key(alg, m);
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Descending-multiset order on monomials: compare expanded part lists from the
// largest part down; the larger list sorts first. This is the row order that
// makes the annihilation-mode pivot minor triangular.
bool t_order_earlier(const FockMonomial& a, const FockMonomial& b) {
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  size_t i = pa.size(), j = pb.size();
  int32_t ri = 0, rj = 0;
  while (i > 0 && j > 0) {
    const auto& x = pa[i - 1];
    const auto& y = pb[j - 1];
    if (x.idx2 != y.idx2) return x.idx2 > y.idx2;
    int32_t ai = x.mult - ri, aj = y.mult - rj;
    int32_t step = std::min(ai, aj);
    ri += step;
    rj += step;
    if (ri == x.mult) {
      --i;
      ri = 0;
    }
    if (rj == y.mult) {
      --j;
      rj = 0;
    }
  }
  return i > 0;  // the longer list (still having parts) sorts first
}

// Pivot preimage for the first annihilation mode: increment the top part by
// the mode's index step (top j -> j + step). The vacuum row's preimage is the
// double-annihilation pair of the mode.
FockMonomial pivot_preimage(Algebra alg, const FockMonomial& row) {
  int32_t step2 = alg == Algebra::untwisted ? 4 : 2;
  if (row.is_vacuum()) {
    if (alg == Algebra::untwisted)
      return FockMonomial({{1, 1}, {3, 1}});  // chi_{-3/2} chi_{-1/2}
    return FockMonomial({{1, 2}});            // chi_{-1/2}^2
  }
  int32_t top = row.max_idx2();
  return row.with_part_removed(top).with_part_added(top + step2);
}

struct BlockProblem {
  Algebra alg;
  int64_t d2;
  int32_t key;
  std::vector<FockMonomial> cols;              // source monomials, monomial order
  std::map<FockMonomial, int> col_index;
};

// Exact constraint image of a source monomial, as (target monomial -> coeff).
FockVector constraint_image(Algebra alg, int k, const FockMonomial& m) {
  return apply_annihilation(alg, k, FockVector::basis(m));
}

// Modular kernel of the first constraint on one block via the triangular
// pivot minor. Returns nullopt when the structured path does not apply (then
// callers fall back to plain elimination).
std::optional<std::vector<std::vector<uint64_t>>> first_constraint_kernel_modp(
    const BlockProblem& bp, uint64_t p) {
  // Rows: target monomials of the first constraint, T-ordered.
  int64_t drop2 = mode_drop2(bp.alg, 0);
  std::vector<FockMonomial> rows = block_monomials(bp.alg, bp.d2 - drop2, bp.key);
  std::sort(rows.begin(), rows.end(), t_order_earlier);
  std::map<FockMonomial, int> row_index;
  for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = int(i);

  // Sparse rows of the constraint matrix. A denominator divisible by p would
  // make the reduction unsound, so that aborts the structured path.
  std::vector<std::vector<std::pair<int, uint64_t>>> sparse_rows(rows.size());
  for (size_t j = 0; j < bp.cols.size(); ++j) {
    FockVector img = constraint_image(bp.alg, 0, bp.cols[j]);
    for (const auto& [t, c] : img.terms()) {
      auto it = row_index.find(t);
      assert(it != row_index.end());
      auto cm = rat_mod(c, p);
      if (!cm) return std::nullopt;
      if (*cm == 0) continue;
      sparse_rows[it->second].push_back({int(j), *cm});
    }
  }

  // Pivot columns phi(row); verify the triangular structure: every off-pivot
  // entry of a pivot column sits at an earlier row.
  std::vector<int> pivot_col(rows.size(), -1);
  std::vector<int> col_is_pivot_row(bp.cols.size(), -1);
  for (size_t i = 0; i < rows.size(); ++i) {
    FockMonomial pre = pivot_preimage(bp.alg, rows[i]);
    auto it = bp.col_index.find(pre);
    if (it == bp.col_index.end()) return std::nullopt;
    pivot_col[i] = it->second;
    if (col_is_pivot_row[it->second] != -1) return std::nullopt;  // phi not injective
    col_is_pivot_row[it->second] = int(i);
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    bool diag_found = false;
    for (const auto& [j, val] : sparse_rows[i]) {
      if (j == pivot_col[i]) diag_found = true;
    }
    if (!diag_found) return std::nullopt;
  }
  // Triangularity: column phi(row i) may appear only in rows <= i.
  std::vector<std::vector<std::pair<int, uint64_t>>> by_col(bp.cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, val] : sparse_rows[i]) by_col[j].push_back({int(i), val});
  for (size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [r, val] : by_col[pivot_col[i]])
      if (r > int(i)) return std::nullopt;
  }

  // Back-substitute, latest row first: kernel vector per free column.
  std::vector<std::vector<uint64_t>> kernel;
  for (size_t f = 0; f < bp.cols.size(); ++f) {
    if (col_is_pivot_row[f] != -1) continue;
    std::vector<uint64_t> x(bp.cols.size(), 0);
    x[f] = 1;
    for (int i = int(rows.size()) - 1; i >= 0; --i) {
      uint64_t acc = 0;
      uint64_t diag = 0;
      for (const auto& [j, val] : sparse_rows[i]) {
        if (j == pivot_col[i])
          diag = val;
        else if (x[j] != 0)
          acc = addmod(acc, mulmod(val, x[j], p), p);
      }
      x[pivot_col[i]] = acc == 0 ? 0 : mulmod(p - acc, invmod(diag, p), p);
    }
    kernel.push_back(std::move(x));
  }
  return kernel;
}

// Intersects the current modular kernel with the k-th constraint.
std::vector<std::vector<uint64_t>> intersect_constraint_modp(
    const BlockProblem& bp, int k, std::vector<std::vector<uint64_t>> kernel, uint64_t p) {
  if (kernel.empty()) return kernel;
  int64_t drop2 = mode_drop2(bp.alg, k);
  std::vector<FockMonomial> rows = block_monomials(bp.alg, bp.d2 - drop2, bp.key);
  std::map<FockMonomial, int> row_index;
  for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = int(i);

  // Sparse constraint columns, then dense (rows x kernel.size()) product.
  std::vector<std::vector<uint64_t>> m(rows.size(), std::vector<uint64_t>(kernel.size(), 0));
  for (size_t j = 0; j < bp.cols.size(); ++j) {
    bool used = false;
    for (const auto& v : kernel)
      if (v[j] != 0) {
        used = true;
        break;
      }
    if (!used) continue;
    FockVector img = constraint_image(bp.alg, k, bp.cols[j]);
    for (const auto& [t, c] : img.terms()) {
      auto cm = rat_mod(c, p);
      if (!cm) throw WindowError("hwv solver: prime divides a constraint denominator");
      if (*cm == 0) continue;
      int r = row_index.at(t);
      for (size_t v = 0; v < kernel.size(); ++v) {
        if (kernel[v][j] == 0) continue;
        m[r][v] = addmod(m[r][v], mulmod(*cm, kernel[v][j], p), p);
      }
    }
  }
  ModKernel mk = kernel_modp(std::move(m), kernel.size(), p);
  std::vector<std::vector<uint64_t>> out;
  for (const auto& y : mk.basis) {
    std::vector<uint64_t> w(bp.cols.size(), 0);
    for (size_t v = 0; v < kernel.size(); ++v) {
      if (y[v] == 0) continue;
      for (size_t j = 0; j < bp.cols.size(); ++j)
        if (kernel[v][j] != 0) w[j] = addmod(w[j], mulmod(y[v], kernel[v][j], p), p);
    }
    out.push_back(std::move(w));
  }
  return out;
}

// Echelonizes modular vectors against the monomial (column) order so each has
// leading coefficient 1 at a distinct column; deterministic normal form.
void echelonize_modp(std::vector<std::vector<uint64_t>>& vecs, uint64_t p) {
  size_t r = 0;
  size_t cols = vecs.empty() ? 0 : vecs[0].size();
  for (size_t c = 0; c < cols && r < vecs.size(); ++c) {
    size_t sel = r;
    while (sel < vecs.size() && vecs[sel][c] == 0) ++sel;
    if (sel == vecs.size()) continue;
    std::swap(vecs[r], vecs[sel]);
    uint64_t inv = invmod(vecs[r][c], p);
    for (size_t k = 0; k < cols; ++k) vecs[r][k] = mulmod(vecs[r][k], inv, p);
    for (size_t i = 0; i < vecs.size(); ++i) {
      if (i == r || vecs[i][c] == 0) continue;
      uint64_t f = vecs[i][c];
      for (size_t k = 0; k < cols; ++k)
        vecs[i][k] = submod(vecs[i][k], mulmod(f, vecs[r][k], p), p);
    }
    ++r;
  }
}

// Kernel of the full stacked system on one block, mod p. nullopt when the
// structured first stage does not apply.
std::optional<std::vector<std::vector<uint64_t>>> block_kernel_modp(const BlockProblem& bp,
                                                                    uint64_t p) {
  int nc = num_constraints(bp.alg, bp.d2);
  if (nc == 0) {
    // No constraint reaches this degree: the whole block is highest weight.
    std::vector<std::vector<uint64_t>> id(bp.cols.size(),
                                          std::vector<uint64_t>(bp.cols.size(), 0));
    for (size_t j = 0; j < bp.cols.size(); ++j) id[j][j] = 1;
    return id;
  }
  auto kernel = first_constraint_kernel_modp(bp, p);
  if (!kernel) return std::nullopt;
  for (int k = 1; k < nc && !kernel->empty(); ++k)
    kernel = intersect_constraint_modp(bp, k, std::move(*kernel), p);
  echelonize_modp(*kernel, p);
  return kernel;
}

// Exact verification that v is annihilated by every positive mode reaching
// its degree.
bool verify_hwv(Algebra alg, const FockVector& v) {
  int64_t d2 = v.max_degree2();
  for (int k = 0; mode_drop2(alg, k) <= d2; ++k)
    if (!apply_annihilation(alg, k, v).is_zero()) return false;
  return true;
}

mpz_class mpz_of_u64(uint64_t x) {
  mpz_class hi(static_cast<unsigned long>(x >> 32));
  hi <<= 32;
  return hi + mpz_class(static_cast<unsigned long>(x & 0xffffffffull));
}

// Lifts a CRT-combined modular kernel basis to exact vectors and verifies
// them. kernels[i] is the same echelonized kernel computed mod primes[i].
// Returns nullopt if reconstruction or verification fails.
std::optional<std::vector<FockVector>> lift_and_verify(
    const BlockProblem& bp, const std::vector<std::vector<std::vector<uint64_t>>>& kernels,
    const std::vector<uint64_t>& primes) {
  mpz_class modulus(1);
  for (uint64_t p : primes) modulus *= mpz_of_u64(p);
  size_t nvec = kernels[0].size();
  std::vector<FockVector> out;
  for (size_t i = 0; i < nvec; ++i) {
    FockVector v;
    for (size_t j = 0; j < bp.cols.size(); ++j) {
      bool any = false;
      for (const auto& k : kernels)
        if (k[i][j] != 0) any = true;
      if (!any) continue;
      // CRT combine the per-prime residues.
      mpz_class residue(0), m(1);
      for (size_t t = 0; t < primes.size(); ++t) {
        mpz_class pt = mpz_of_u64(primes[t]);
        mpz_class rt = mpz_of_u64(kernels[t][i][j]);
        if (t == 0) {
          residue = rt;
          m = pt;
        } else {
          // residue' = residue + m * ((rt - residue) * m^{-1} mod pt)
          mpz_class minv, diff = (rt - residue) % pt;
          if (diff < 0) diff += pt;
          mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), pt.get_mpz_t());
          residue += m * ((diff * minv) % pt);
          m *= pt;
        }
      }
      auto r = rational_reconstruct(residue, modulus);
      if (!r) return std::nullopt;
      v.add_term(bp.cols[j], *r);
    }
    if (!verify_hwv(bp.alg, v)) return std::nullopt;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<int> pivot_pattern(const std::vector<std::vector<uint64_t>>& kernel) {
  std::vector<int> pat;
  for (const auto& v : kernel) {
    int lead = -1;
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        lead = int(j);
        break;
      }
    pat.push_back(lead);
  }
  return pat;
}

// Exact fallback: stacked dense elimination over Q on one block.
std::vector<FockVector> block_kernel_exact(const BlockProblem& bp) {
  int nc = num_constraints(bp.alg, bp.d2);
  std::vector<std::vector<Rat>> rows;
  for (int k = 0; k < nc; ++k) {
    std::vector<FockMonomial> targets = block_monomials(bp.alg, bp.d2 - mode_drop2(bp.alg, k), bp.key);
    std::map<FockMonomial, int> tix;
    for (size_t i = 0; i < targets.size(); ++i) tix[targets[i]] = int(i);
    size_t base = rows.size();
    rows.resize(base + targets.size(), std::vector<Rat>(bp.cols.size(), Rat(0)));
    for (size_t j = 0; j < bp.cols.size(); ++j) {
      FockVector img = constraint_image(bp.alg, k, bp.cols[j]);
      for (const auto& [t, c] : img.terms()) rows[base + tix.at(t)][j] = c;
    }
  }
  auto ker = kernel_basis(std::move(rows), bp.cols.size());
  std::vector<FockVector> out;
  for (const auto& x : ker) {
    FockVector v;
    for (size_t j = 0; j < x.size(); ++j)
      if (!is_zero(x[j])) v.add_term(bp.cols[j], x[j]);
    out.push_back(std::move(v));
  }
  return out;
}

// Echelon-normalizes exact vectors against the monomial order (leading
// coordinate 1, distinct leading monomials). Used by both solver paths so the
// output basis is reproducible.
void echelonize_exact(std::vector<FockVector>& vecs) {
  std::vector<FockVector> done;
  for (FockVector v : vecs) {
    for (const auto& d : done) {
      if (v.is_zero()) break;
      const auto& lead = d.terms().begin()->first;
      Rat c = v.coeff(lead);
      if (!is_zero(c)) v -= c * d;
    }
    if (v.is_zero()) throw std::runtime_error("hwv basis: dependent kernel vectors");
    Rat leadc = v.terms().begin()->second;
    v *= Rat(1) / leadc;
    done.push_back(std::move(v));
  }
  std::sort(done.begin(), done.end(), [](const FockVector& a, const FockVector& b) {
    return a.terms().begin()->first < b.terms().begin()->first;
  });
  // Reduce upper entries for a unique reduced form.
  for (size_t i = done.size(); i-- > 0;) {
    for (size_t k = i + 1; k < done.size(); ++k) {
      const auto& lead = done[k].terms().begin()->first;
      Rat c = done[i].coeff(lead);
      if (!is_zero(c)) done[i] -= c * done[k];
    }
  }
  vecs = std::move(done);
}

// Solves one block with the certified modular path, falling back to exact
// elimination. The returned vectors are exact, verified, and normalized:
// every returned vector is checked against all constraints in exact
// arithmetic, and the modular kernel dimension bounds the true dimension
// from above, so the basis is provably complete.
std::vector<FockVector> solve_block(const BlockProblem& bp) {
  std::vector<uint64_t> primes;
  std::vector<std::vector<std::vector<uint64_t>>> kernels;
  std::vector<int> pattern;
  for (int attempt = 0; attempt < 4; ++attempt) {
    uint64_t p = crt_prime(attempt);
    std::optional<std::vector<std::vector<uint64_t>>> kernel;
    try {
      kernel = block_kernel_modp(bp, p);
    } catch (const WindowError&) {
      continue;  // this prime divides a denominator; try the next one
    }
    if (!kernel) {
      kernels.clear();
      break;  // structured stage does not apply: fall back
    }
    if (!kernels.empty()) {
      if (kernel->size() < kernels[0].size()) {
        // Earlier primes were unlucky (their kernel was too big): restart.
        primes.clear();
        kernels.clear();
      } else if (kernel->size() > kernels[0].size() || pivot_pattern(*kernel) != pattern) {
        continue;  // this prime is unlucky or incompatible; skip it
      }
    }
    if (kernels.empty()) pattern = pivot_pattern(*kernel);
    primes.push_back(p);
    kernels.push_back(std::move(*kernel));
    auto lifted = lift_and_verify(bp, kernels, primes);
    if (!lifted) continue;  // coefficients too large for modulus: add a prime
    echelonize_exact(*lifted);
    return *lifted;
  }
  auto exact = block_kernel_exact(bp);
  echelonize_exact(exact);
  return exact;
}

BlockProblem make_block(Algebra alg, int64_t d2, int32_t key) {
  BlockProblem bp{alg, d2, key, block_monomials(alg, d2, key), {}};
  for (size_t j = 0; j < bp.cols.size(); ++j) bp.col_index[bp.cols[j]] = int(j);
  return bp;
}

}  // namespace

bool is_hwv(Algebra alg, const FockVector& v) {
  if (v.is_zero()) return false;
  return verify_hwv(alg, v);
}

HwvBasis hwv_basis(Algebra alg, int64_t degree2) {
  HwvBasis out;
  out.algebra = alg;
  out.degree2 = degree2;
  for (int32_t key : block_keys(alg, degree2)) {
    auto vecs = solve_block(make_block(alg, degree2, key));
    out.vectors.insert(out.vectors.end(), vecs.begin(), vecs.end());
  }
  std::sort(out.vectors.begin(), out.vectors.end(),
            [](const FockVector& a, const FockVector& b) {
              return a.terms().begin()->first < b.terms().begin()->first;
            });
  if (alg == Algebra::untwisted) {
    for (const auto& v : out.vectors) out.charges.push_back(v.terms().begin()->first.charge());
  }
  return out;
}

HwvBasis hwv_basis_reference(Algebra alg, int64_t degree2) {
  HwvBasis out;
  out.algebra = alg;
  out.degree2 = degree2;
  for (int32_t key : block_keys(alg, degree2)) {
    auto vecs = block_kernel_exact(make_block(alg, degree2, key));
    echelonize_exact(vecs);
    out.vectors.insert(out.vectors.end(), vecs.begin(), vecs.end());
  }
  std::sort(out.vectors.begin(), out.vectors.end(),
            [](const FockVector& a, const FockVector& b) {
              return a.terms().begin()->first < b.terms().begin()->first;
            });
  if (alg == Algebra::untwisted) {
    for (const auto& v : out.vectors) out.charges.push_back(v.terms().begin()->first.charge());
  }
  return out;
}

HwvCounts hwv_counts(Algebra alg, int64_t max_degree2) {
  HwvCounts out;
  for (int64_t d2 = 0; d2 <= max_degree2; ++d2) {
    HwvBasis basis = hwv_basis(alg, d2);
    out.by_degree2[d2] = int64_t(basis.vectors.size());
    if (alg == Algebra::untwisted) {
      for (size_t i = 0; i < basis.vectors.size(); ++i)
        out.by_degree2_charge[{d2, basis.charges[i]}]++;
    }
  }
  return out;
}

std::vector<EigenRecord> eigenbasis(Algebra alg, int64_t degree2) {
  std::vector<EigenRecord> out;
  // Descendant multisets: odd parts o with 2*sum(o) = degree2 - d0 for the
  // twisted algebra, arbitrary parts n with 4*sum(n) = degree2 - d0 untwisted.
  for (int64_t d02 = degree2; d02 >= 0; --d02) {
    int64_t gap = degree2 - d02;
    if (alg == Algebra::untwisted && gap % 4 != 0) continue;
    if (alg == Algebra::twisted && gap % 2 != 0) continue;
    HwvBasis basis = hwv_basis(alg, d02);
    if (basis.vectors.empty()) continue;
    // Partitions of the gap into the allowed raising steps.
    int64_t target = alg == Algebra::untwisted ? gap / 4 : gap / 2;
    std::vector<std::vector<int64_t>> multisets;
    std::vector<int64_t> acc;
    auto rec = [&](auto&& self, int64_t remaining, int64_t max_part) -> void {
      if (remaining == 0) {
        multisets.push_back(acc);
        return;
      }
      for (int64_t part = std::min(remaining, max_part); part >= 1; --part) {
        if (alg == Algebra::twisted && part % 2 == 0) continue;
        acc.push_back(part);
        self(self, remaining - part, part);
        acc.pop_back();
      }
    };
    rec(rec, target, target);
    for (const auto& v0 : basis.vectors) {
      for (const auto& ms : multisets) {
        FockVector v = v0;
        for (int64_t part : ms) {
          if (alg == Algebra::untwisted)
            v = heis_untwisted(int32_t(-part), v);
          else
            v = heis_twisted(HalfOdd(int32_t(-part)), v);
        }
        if (v.is_zero()) throw std::runtime_error("eigenbasis: descendant vanished");
        EigenRecord rec_out;
        rec_out.v = v;
        // Record applied eigenvalues; a non-eigenvector falsifies the module
        // structure and is an error.
        auto eigen_of = [&](const FockVector& img) -> Rat {
          if (img.is_zero()) return Rat(0);
          const auto& [m0, c0] = *img.terms().begin();
          Rat lambda = c0 / v.coeff(m0);
          if (!(lambda * v == img)) throw std::runtime_error("eigenbasis: not an eigenvector");
          return lambda;
        };
        rec_out.deg = eigen_of(grade_2L0(v));
        if (alg == Algebra::twisted) {
          rec_out.lt0 = eigen_of(grade_Lt0(v));
        } else {
          rec_out.charge = int32_t(eigen_of(grade_charge(v)).get_num().get_si());
          rec_out.lh0 = eigen_of(grade_Lh0(v));
        }
        out.push_back(std::move(rec_out));
      }
    }
  }
  // Full-rank assertion over the degree-d2 monomial space.
  std::vector<FockMonomial> monos = monomials_of_degree(degree2);
  std::map<FockMonomial, int> ix;
  for (size_t i = 0; i < monos.size(); ++i) ix[monos[i]] = int(i);
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : out) {
    std::vector<Rat> row(monos.size(), Rat(0));
    for (const auto& [m, c] : r.v.terms()) row[ix.at(m)] = c;
    rows.push_back(std::move(row));
  }
  if (rank(std::move(rows)) != monos.size())
    throw std::runtime_error("eigenbasis: descendants are rank-deficient");
  return out;
}

}  // namespace ckp
