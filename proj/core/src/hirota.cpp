// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/hirota.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ckp/modes.hpp"

namespace ckp {

TensorVector hirota_apply(const TensorVector& w) {
  TensorVector out;
  for (const auto& [key, c] : w.terms()) {
    const FockMonomial& m1 = key.first;
    const FockMonomial& m2 = key.second;
    // n > 0: chi_n contracts on the left, chi_{-n} creates on the right.
    for (const auto& p : m1.parts()) {
      HalfOdd n(p.idx2);
      Rat coeff = c * Rat(contraction_sign(n)) * Rat(p.mult * contraction_sign(n));
      out.add_term(m1.with_part_removed(p.idx2), m2.with_part_added(p.idx2), coeff);
    }
    // n < 0: chi_n creates on the left, chi_{-n} contracts on the right.
    for (const auto& p : m2.parts()) {
      HalfOdd n(-p.idx2);
      Rat coeff = c * Rat(contraction_sign(n)) * Rat(p.mult * contraction_sign(-n));
      out.add_term(m1.with_part_added(p.idx2), m2.with_part_removed(p.idx2), coeff);
    }
  }
  return out;
}

namespace {

// Seeded small-height rationals: numerators in [-9, 9], denominators in [1, 9].
Rat random_small_rat(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  int n = num(rng);
  while (nonzero && n == 0) n = num(rng);
  return rat(n, den(rng));
}

}  // namespace

ScanReport no_solution_scan(int64_t max_degree2, int trials, uint64_t seed) {
  ScanReport report;
  std::mt19937_64 rng(seed);
  for (int64_t d2 = 1; d2 <= max_degree2; ++d2) {
    // Every basis monomial of this degree.
    for (const auto& m : monomials_of_degree(d2)) {
      FockVector v = FockVector::basis(m);
      ++report.monomials_checked;
      if (hirota_apply(tensor_of(v, v)).is_zero()) {
        report.clean = false;
        report.violation = "monomial " + m.str();
        return report;
      }
    }
    // Random rational combinations of all monomials of degree <= d2, with a
    // guaranteed nonvacuum component.
    std::vector<FockMonomial> pool;
    for (int64_t e2 = 1; e2 <= d2; ++e2) {
      auto layer = monomials_of_degree(e2);
      pool.insert(pool.end(), layer.begin(), layer.end());
    }
    for (int t = 0; t < trials; ++t) {
      FockVector v;
      v.add_term(FockMonomial::vacuum(), random_small_rat(rng, false));
      for (size_t i = 0; i < pool.size(); ++i)
        v.add_term(pool[i], random_small_rat(rng, i + 1 == pool.size()));
      ++report.random_checked;
      if (hirota_apply(tensor_of(v, v)).is_zero()) {
        report.clean = false;
        report.violation = "random combination at degree " + std::to_string(d2) +
                           " trial " + std::to_string(t);
        return report;
      }
    }
  }
  return report;
}

namespace {

TensorVector apply_both_sides(const std::function<FockVector(const FockVector&)>& op,
                              const TensorVector& w) {
  TensorVector out;
  for (const auto& [key, c] : w.terms()) {
    FockVector left = op(FockVector::basis(key.first, c));
    for (const auto& [m, cc] : left.terms()) out.add_term(m, key.second, cc);
    FockVector right = op(FockVector::basis(key.second, c));
    for (const auto& [m, cc] : right.terms()) out.add_term(key.first, m, cc);
  }
  return out;
}

std::vector<FockMonomial> monomials_up_to(int64_t d2max) {
  std::vector<FockMonomial> out;
  for (int64_t d2 = 0; d2 <= d2max; ++d2) {
    auto layer = monomials_of_degree(d2);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace

bool symmetry_check(HalfOdd a, HalfOdd b, int64_t probe2) {
  auto e_op = [a, b](const FockVector& v) {
    FockVector out = apply_normal_pair(a, b, v);
    out *= Rat(-1);
    return out;
  };
  auto basis = monomials_up_to(probe2);
  // The Hirota sum can move up to probe2 of degree across the tensor factors
  // before E adds its own shift; anything beyond that is a logic error.
  int64_t out_bound2 = 2 * probe2 + std::abs(a.twice()) + std::abs(b.twice());
  for (const auto& m1 : basis) {
    for (const auto& m2 : basis) {
      TensorVector w;
      w.add_term(m1, m2, Rat(1));
      TensorVector lhs = apply_both_sides(e_op, hirota_apply(w));
      lhs -= hirota_apply(apply_both_sides(e_op, w));
      for (const auto& [key, c] : lhs.terms())
        if (key.first.degree2() > out_bound2 || key.second.degree2() > out_bound2)
          throw EscapeError("symmetry_check: escape at " + key.first.str());
      if (!lhs.is_zero()) return false;
    }
  }
  return true;
}

void QuadCombo::add(int32_t a2, int32_t b2, const Rat& c) {
  if (is_zero(c)) return;
  auto key = std::minmax(a2, b2);
  auto [it, inserted] = quads.emplace(std::pair<int32_t, int32_t>(key.first, key.second), c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) quads.erase(it);
  }
}

QuadCombo wick_commutator(HalfOdd a, HalfOdd b, HalfOdd c, HalfOdd d) {
  // [AB, CD] = [B,C] AD + [B,D] AC + [A,C] DB + [A,D] CB with scalar
  // brackets; the contraction parts of the normal orderings drop out of the
  // commutator.
  auto bracket = [](HalfOdd x, HalfOdd y) {
    return x.twice() == -y.twice() ? Rat(contraction_sign(x)) : Rat(0);
  };
  struct Word {
    HalfOdd x, y;
    Rat coeff;
  };
  std::vector<Word> words{{a, d, bracket(b, c)},
                          {a, c, bracket(b, d)},
                          {d, b, bracket(a, c)},
                          {c, b, bracket(a, d)}};
  QuadCombo out;
  for (const auto& w : words) {
    if (is_zero(w.coeff)) continue;
    out.add(w.x.twice(), w.y.twice(), w.coeff);
    // Normal ordering: xy = :xy: + <xy>, with a contraction only when the
    // left factor annihilates the right.
    if (w.x.positive() && w.x.twice() == -w.y.twice())
      out.scalar += w.coeff * Rat(contraction_sign(w.x));
  }
  return out;
}

namespace {

int pow_sign(int64_t e) { return (e % 2 == 0) ? 1 : -1; }

void cinfty_add(CinftyElem& x, int64_t i, int64_t j, const Rat& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = x.entries.emplace(std::pair<int64_t, int64_t>(i, j), c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) x.entries.erase(it);
  }
}

}  // namespace

CinftyElem cinfty_generator(HalfOdd a, HalfOdd b) {
  // -:chi_a chi_b: realizes (-1)^j E_{ij} - (-1)^i E_{1-j,1-i} with
  // i = 1/2 - a, j = b + 1/2.
  int64_t i = (1 - a.twice()) / 2;
  int64_t j = (b.twice() + 1) / 2;
  CinftyElem x;
  cinfty_add(x, i, j, Rat(pow_sign(j)));
  cinfty_add(x, 1 - j, 1 - i, Rat(-pow_sign(i)));
  return x;
}

CinftyElem cinfty_bracket(const CinftyElem& x, const CinftyElem& y) {
  CinftyElem out;
  for (const auto& [eij, cx] : x.entries) {
    for (const auto& [ekl, cy] : y.entries) {
      auto [i, j] = eij;
      auto [k, l] = ekl;
      Rat c = cx * cy;
      if (j == k) cinfty_add(out, i, l, c);
      if (l == i) cinfty_add(out, k, j, -c);
      if (j == k && l == i) {
        if (i <= 0 && j >= 1) out.central += c;
        if (j <= 0 && i >= 1) out.central -= c;
      }
    }
  }
  return out;
}

QuadCombo cinfty_to_quadratics(const CinftyElem& x) {
  QuadCombo out;
  std::map<std::pair<int64_t, int64_t>, Rat> rest = x.entries;
  while (!rest.empty()) {
    auto [key, kappa] = *rest.begin();
    rest.erase(rest.begin());
    auto [u, v] = key;
    // G_{uv} = (-1)^v E_{uv} - (-1)^u E_{1-v,1-u} maps to -:chi_m chi_n: with
    // m = 1/2 - u, n = v - 1/2.
    int32_t m2 = int32_t(1 - 2 * u), n2 = int32_t(2 * v - 1);
    if (u + v == 1) {
      // Self-paired: E_{uv} = G_{uv} / ((-1)^v - (-1)^u).
      Rat denom = Rat(pow_sign(v) - pow_sign(u));
      out.add(m2, n2, -kappa / denom);
      continue;
    }
    auto partner = rest.find({1 - v, 1 - u});
    if (partner == rest.end() || partner->second != kappa * Rat(pow_sign(u + v - 1)))
      throw std::logic_error("cinfty_to_quadratics: entries violate the c-infinity symmetry");
    rest.erase(partner);
    out.add(m2, n2, -kappa * Rat(pow_sign(v)));
  }
  return out;
}

FockVector apply_quadcombo_rep(const QuadCombo& q, const FockVector& v) {
  FockVector out;
  for (const auto& [key, c] : q.quads)
    out += c * apply_normal_pair(HalfOdd(key.first), HalfOdd(key.second), v);
  return out;
}

CentralProbeResult central_charge_probe(HalfOdd a, HalfOdd b, HalfOdd c, HalfOdd d,
                                        int64_t probe2) {
  CentralProbeResult res{Rat(0), Rat(0), false, false, false, false};

  CinftyElem bracket = cinfty_bracket(cinfty_generator(a, b), cinfty_generator(c, d));
  res.cocycle = bracket.central;
  CinftyElem noncentral = bracket;
  noncentral.central = 0;
  QuadCombo predicted = cinfty_to_quadratics(noncentral);

  // Wick oracle cross-check: [-:ab:, -:cd:] = [:ab:, :cd:].
  QuadCombo wick = wick_commutator(a, b, c, d);
  res.wick_agrees =
      wick.quads == predicted.quads && wick.scalar == res.cocycle * Rat(-1, 2);

  // Fock-space matrices on the degree <= probe2 basis.
  auto rho_ab = [&](const FockVector& v) {
    FockVector out = apply_normal_pair(a, b, v);
    out *= Rat(-1);
    return out;
  };
  auto rho_cd = [&](const FockVector& v) {
    FockVector out = apply_normal_pair(c, d, v);
    out *= Rat(-1);
    return out;
  };
  bool have_scalar = false;
  bool is_scalar = true;
  Rat scalar(0);
  for (const auto& m : monomials_up_to(probe2)) {
    FockVector v = FockVector::basis(m);
    FockVector diff = rho_ab(rho_cd(v)) - rho_cd(rho_ab(v)) - apply_quadcombo_rep(predicted, v);
    // The residual must be scalar * v for one common scalar.
    Rat here = diff.is_zero() ? Rat(0) : diff.coeff(m);
    if (!(here * v == diff)) {
      is_scalar = false;
      break;
    }
    if (!have_scalar) {
      scalar = here;
      have_scalar = true;
    } else if (here != scalar) {
      is_scalar = false;
      break;
    }
  }
  res.residual_is_scalar = is_scalar;
  res.residual = scalar;
  res.matches_minus_half = is_scalar && scalar == res.cocycle * Rat(-1, 2);
  res.mutation_fails = is_zero(res.cocycle) || scalar != res.cocycle * Rat(1, 2);
  return res;
}

BetaGammaReport beta_gamma_equivalence(int64_t probe2) {
  // Res_z(beta (x) gamma - gamma (x) beta) in modes: sum over half-odd m of
  // eps(m) chi_m (x) chi_{-m}, with eps = +1 on the beta index class
  // (2m = 1 mod 4) and -1 on the gamma class (2m = 3 mod 4).
  auto eps = [](int32_t m2) { return (((m2 % 4) + 4) % 4) == 1 ? 1 : -1; };
  auto apply_res = [&](const TensorVector& w) {
    TensorVector out;
    for (const auto& [key, c] : w.terms()) {
      for (const auto& p : key.first.parts()) {
        HalfOdd n(p.idx2);
        Rat coeff = c * Rat(eps(p.idx2)) * Rat(p.mult * contraction_sign(n));
        out.add_term(key.first.with_part_removed(p.idx2), key.second.with_part_added(p.idx2),
                     coeff);
      }
      for (const auto& p : key.second.parts()) {
        Rat coeff = c * Rat(eps(-p.idx2)) * Rat(p.mult * contraction_sign(HalfOdd(p.idx2)));
        out.add_term(key.first.with_part_added(p.idx2), key.second.with_part_removed(p.idx2),
                     coeff);
      }
    }
    return out;
  };

  BetaGammaReport report;
  bool have_scalar = false;
  auto basis = monomials_up_to(probe2);
  for (const auto& m1 : basis) {
    for (const auto& m2 : basis) {
      TensorVector w;
      w.add_term(m1, m2, Rat(1));
      TensorVector sc = hirota_apply(w);
      TensorVector res = apply_res(w);
      if (sc.is_zero() != res.is_zero()) return report;
      if (sc.is_zero()) continue;
      // sc = scalar * res with one global scalar.
      const auto& [k0, c0] = *res.terms().begin();
      Rat ratio = sc.terms().count(k0) ? sc.terms().at(k0) / c0 : Rat(0);
      TensorVector scaled = res;
      scaled *= ratio;
      if (!(scaled == sc)) return report;
      if (!have_scalar) {
        report.scalar = ratio;
        have_scalar = true;
      } else if (ratio != report.scalar) {
        return report;
      }
    }
  }
  report.pass = have_scalar && !is_zero(report.scalar);
  return report;
}

int64_t QuadraticGenerator::max_shift2() const {
  int64_t s = 0;
  for (const auto& [key, c] : coeffs) s = std::max<int64_t>(s, -key.first - key.second);
  return s;
}

int32_t QuadraticGenerator::max_index2() const {
  int32_t s = 0;
  for (const auto& [key, c] : coeffs)
    s = std::max({s, int32_t(-key.first), int32_t(-key.second)});
  return s;
}

FockVector exp_orbit_tau(const QuadraticGenerator& g, int64_t cutoff2) {
  for (const auto& [key, c] : g.coeffs)
    if (key.first >= 0 || key.second >= 0)
      throw std::invalid_argument("exp_orbit_tau: generator support must be creation-creation");
  auto apply_g = [&](const FockVector& v) {
    FockVector out;
    for (const auto& [key, c] : g.coeffs) {
      for (const auto& [m, cv] : v.terms()) {
        FockMonomial up = m.with_part_added(-key.first).with_part_added(-key.second);
        if (up.degree2() <= cutoff2) out.add_term(up, -c * cv);
      }
    }
    return out;
  };
  FockVector tau = FockVector::vacuum();
  FockVector cur = FockVector::vacuum();
  for (int64_t k = 1; !cur.is_zero(); ++k) {
    cur = apply_g(cur);
    cur *= rat(1, k);
    tau += cur;
  }
  return tau;
}

bool hirota_residual_vanishes(const FockVector& tau, int64_t tau_cutoff2, int64_t window2) {
  int32_t j2 = 0;
  for (const auto& [m, c] : tau.terms()) j2 = std::max(j2, m.max_idx2());
  if (window2 > tau_cutoff2 - j2)
    throw WindowError("hirota_residual_vanishes: window exceeds the guaranteed region");
  TensorVector residual = hirota_apply(tensor_of(tau, tau));
  return residual.bidegree_window(window2, window2).is_zero();
}

}  // namespace ckp
