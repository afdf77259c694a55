// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/identities.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ckp {

IdentityContext::IdentityContext(int64_t N) : N_(N) {
  if (N < 2) throw std::invalid_argument("IdentityContext: order must be >= 2");
}

const HwvCounts& IdentityContext::untwisted_counts() {
  if (!untwisted_) untwisted_ = hwv_counts(Algebra::untwisted, N_);
  return *untwisted_;
}

const HwvCounts& IdentityContext::twisted_counts() {
  if (!twisted_) twisted_ = hwv_counts(Algebra::twisted, N_);
  return *twisted_;
}

const CrankTable& IdentityContext::crank_table() {
  if (!crank_) crank_ = CrankTable(int32_t(N_ / 2));
  return *crank_;
}

namespace {

struct Comparison {
  std::string label;
  const Series* lhs;
  const Series* rhs;
  std::optional<Window> cmp;
};

IdentityReport run_comparisons(const std::string& name, int64_t N, const std::string& windows,
                               const std::vector<Comparison>& comps) {
  IdentityReport report;
  report.name = name;
  report.order = N;
  report.windows = windows;
  for (const auto& c : comps) {
    auto diff = first_difference(*c.lhs, *c.rhs, c.cmp);
    if (diff) {
      report.pass = false;
      report.mismatch = diff;
      report.detail = c.label;
      return report;
    }
  }
  report.pass = true;
  return report;
}

IdentityReport check_dimq(IdentityContext& ctx) {
  int64_t N = ctx.order();
  Series lhs = char_dimq_bruteforce(N);
  Series rhs = char_dimq_product(N);
  return run_comparisons("dimq", N, window_q(N).str(kQ),
                         {{"basis count vs product", &lhs, &rhs, {}}});
}

IdentityReport check_charqz(IdentityContext& ctx) {
  int64_t N = ctx.order();
  Series lhs = char_fock_bruteforce(N);
  Series rhs = char_fock_product(N);
  return run_comparisons("charqz", N, window_qz(N).str(kQZ),
                         {{"brute-force trace vs product", &lhs, &rhs, {}}});
}

IdentityReport check_qttrace(IdentityContext& ctx) {
  int64_t N = ctx.order();
  Series lhs = char_qt_from_counts(ctx.twisted_counts(), N);
  Series rhs = char_qt_odp(N);
  return run_comparisons("qttrace", N, window_qt(N).str(kQT),
                         {{"solver trace vs ODP sum", &lhs, &rhs, {}}});
}

IdentityReport check_triple(IdentityContext& ctx) {
  int64_t N = ctx.order();
  Series lhs = char_triple_from_counts(ctx.untwisted_counts(), N);
  Series rhs = char_triple_bpdi(N);
  return run_comparisons("triple", N, window_qzr(N).str(kQZR),
                         {{"solver trace vs BP_DI sum", &lhs, &rhs, {}}});
}

IdentityReport check_hwvchar(IdentityContext& ctx) {
  int64_t N = ctx.order();
  Series lhs = char_hwv_from_counts(ctx.untwisted_counts(), N);
  Series rhs = char_hwv_sum_formula(N);
  return run_comparisons("hwvchar", N, window_qz(N).str(kQZ),
                         {{"hwv character vs closed form", &lhs, &rhs, {}}});
}

IdentityReport check_fullchar(IdentityContext& ctx) {
  int64_t N = ctx.order();
  Series lhs = char_fock_bruteforce(N);
  Series rhs = char_fock_sum_formula(N);
  return run_comparisons("fullchar", N, window_qz(N).str(kQZ),
                         {{"brute-force trace vs closed form", &lhs, &rhs, {}}});
}

IdentityReport check_identityR(IdentityContext& ctx) {
  int64_t N = ctx.order();
  Series lhs = identityR_lhs(N);
  Series rhs = identityR_rhs(N);
  IdentityReport report = run_comparisons("identityR", N, window_qz(N).str(kQZ),
                                          {{"bilateral sums vs product", &lhs, &rhs, {}}});
  if (!report.pass) return report;
  // Structural side-check: only integral q powers and even z powers survive.
  for (const Series* side : {&lhs, &rhs}) {
    for (const auto& [e, c] : side->terms()) {
      if (e[0] % 2 != 0 || e[1] % 4 != 0) {
        report.pass = false;
        report.mismatch = SeriesDiff{e, c, Rat(0)};
        report.detail = "non-integral q power or odd z power";
        return report;
      }
    }
  }
  return report;
}

IdentityReport check_threechars(IdentityContext& ctx) {
  int64_t N = ctx.order();
  Series a = char_hwv_from_counts(ctx.untwisted_counts(), N);
  Series b = char_hwv_bpdi(N);
  Series c = char_hwv_product(N);
  Series d = char_hwv_sum_formula(N);
  return run_comparisons("threechars", N, window_qz(N).str(kQZ),
                         {{"solver vs BP_DI", &a, &b, {}},
                          {"solver vs product", &a, &c, {}},
                          {"solver vs closed form", &a, &d, {}},
                          {"BP_DI vs product", &b, &c, {}},
                          {"BP_DI vs closed form", &b, &d, {}},
                          {"product vs closed form", &c, &d, {}}});
}

IdentityReport check_cranks(IdentityContext& ctx) {
  int64_t N = ctx.order();
  const CrankTable& table = ctx.crank_table();
  Series gf = crank_gf_from_table(table, N);
  Series gfp = crank_gf_product(N);
  Series sub = crank_substituted_sum(table, N);
  Series hwv = char_hwv_from_counts(ctx.untwisted_counts(), N);
  Series bpdi = char_hwv_bpdi(N);
  Series prod = char_hwv_product(N);
  return run_comparisons("cranks", N, window_qz(N).str(kQZ),
                         {{"crank table vs generating function", &gf, &gfp, {}},
                          {"substituted crank sum vs hwv character", &sub, &hwv, {}},
                          {"substituted crank sum vs BP_DI", &sub, &bpdi, {}},
                          {"substituted crank sum vs product", &sub, &prod, {}}});
}

IdentityReport check_jacobi(IdentityContext& ctx) {
  int64_t N = ctx.order();
  Series lhs = jacobi_triangular_sum(N);
  Series rhs = jacobi_triangular_product(N);
  return run_comparisons("jacobi", N, window_q(N).str(kQ),
                         {{"triangular sum vs product", &lhs, &rhs, {}}});
}

// --- the Ramanujan 1-psi-1 specialization chain ---

// Window policy: q exponents only grow, so u needs no guard; the a/x/y
// exponents move both ways, so both sides are computed on M + G and compared
// on |exponent| <= M only. Soundness of the guard: every factor that moves an
// auxiliary exponent toward the compared region carries at least one unit of
// u per doubled step, except for at most two single-step factors per
// variable; a term dropped outside M + G can therefore reach the compared
// region only with u > G - 4. G = u + 4 makes that impossible within the
// compared u window.
struct PsiParams {
  int64_t u;      // compared u window
  int64_t M;      // compared aux window (doubled)
  int64_t G;      // guard (doubled)
};

IdentityReport check_ramanujan(IdentityContext& ctx) {
  int64_t N = ctx.order();
  PsiParams pp{std::min<int64_t>(N, 20), 12, 0};
  pp.G = pp.u + 4;
  if (pp.G <= pp.u || pp.M <= 0)
    throw WindowError("ramanujan: declared guard exceeds the supplied window");
  int64_t W = pp.M + pp.G;

  IdentityReport report;
  report.name = "ramanujan";
  report.order = N;
  report.windows = "u<=" + std::to_string(pp.u) + ",|aux|<=" + std::to_string(pp.M) +
                   " (guard +" + std::to_string(pp.G) + ", doubled exponents)";

  auto fail = [&](const std::string& label, const SeriesDiff& diff) {
    report.pass = false;
    report.detail = label;
    report.mismatch = diff;
    return report;
  };

  // Step 0: b = a q specialization of 1-psi-1, variables (q, a, x):
  // (1-a) sum_k x^k/(1-a q^k) = (q;q)^2 (q/(ax);q) (ax;q) /
  //                             [(aq;q)(q/x;q)(q/a;q)(x;q)].
  {
    std::vector<std::string> V{"q", "a", "x"};
    Window w{pp.u, {W, W}};
    Window cmp{pp.u, {pp.M, pp.M}};
    Series lhs(V, w);
    {
      Series t = Series::one(V, w);
      t.mul_geometric({0, 2, 0}, Rat(1));  // k = 0: 1/(1-a)
      lhs += t;
      for (int64_t k = 1; 2 * k <= W; ++k) {
        Series u_ = Series::monomial(V, w, {0, 0, 2 * k});
        u_.mul_geometric({2 * k, 2, 0}, Rat(1));
        lhs += u_;
        // k < 0 branch rewritten with positive q valuation:
        // x^{-k}/(1-a q^{-k}) = -(1/a) x^{-k} q^k / (1 - a^{-1} q^k).
        Series v_ = Series::monomial(V, w, {2 * k, -2, -2 * k}, Rat(-1));
        v_.mul_geometric({2 * k, -2, 0}, Rat(1));
        lhs += v_;
      }
      lhs.mul_one_minus({0, 2, 0}, Rat(1));
    }
    Series rhs = Series::one(V, w);
    for (int64_t i = 1; 2 * i <= pp.u; ++i) {
      rhs.mul_one_minus({2 * i, 0, 0}, Rat(1));
      rhs.mul_one_minus({2 * i, 0, 0}, Rat(1));
    }
    for (int64_t i = 0; 2 * (i + 1) <= pp.u; ++i) rhs.mul_one_minus({2 * (i + 1), -2, -2}, Rat(1));
    for (int64_t i = 0; 2 * i <= pp.u; ++i) rhs.mul_one_minus({2 * i, 2, 2}, Rat(1));
    for (int64_t i = 0; 2 * (i + 1) <= pp.u; ++i) rhs.mul_geometric({2 * (i + 1), 2, 0}, Rat(1));
    for (int64_t i = 0; 2 * (i + 1) <= pp.u; ++i) rhs.mul_geometric({2 * (i + 1), 0, -2}, Rat(1));
    for (int64_t i = 0; 2 * (i + 1) <= pp.u; ++i) rhs.mul_geometric({2 * (i + 1), -2, 0}, Rat(1));
    rhs.mul_geometric({0, 0, 2}, Rat(1));
    for (int64_t i = 1; 2 * i <= pp.u; ++i) rhs.mul_geometric({2 * i, 0, 2}, Rat(1));
    if (auto diff = first_difference(lhs, rhs, cmp)) return fail("step 0 (b = aq)", *diff);
  }

  // Step 1: x = q y, variables (q, a, y).
  {
    std::vector<std::string> V{"q", "a", "y"};
    Window w{pp.u, {W, W}};
    Window cmp{pp.u, {pp.M, pp.M}};
    Series lhs(V, w);
    {
      Series t = Series::one(V, w);
      t.mul_geometric({0, 2, 0}, Rat(1));
      lhs += t;
      for (int64_t k = 1; 2 * k <= std::max(W, pp.u); ++k) {
        if (2 * k <= pp.u) {
          Series u_ = Series::monomial(V, w, {2 * k, 0, 2 * k});
          u_.mul_geometric({2 * k, 2, 0}, Rat(1));
          lhs += u_;
        }
        if (2 * k <= W) {
          Series v_ = Series::monomial(V, w, {0, -2, -2 * k}, Rat(-1));
          v_.mul_geometric({2 * k, -2, 0}, Rat(1));
          lhs += v_;
        }
      }
    }
    Series rhs = Series::one(V, w);
    rhs.mul_geometric({0, 2, 0}, Rat(1));
    for (int64_t i = 1; 2 * i <= pp.u; ++i) {
      rhs.mul_one_minus({2 * i, 0, 0}, Rat(1));
      rhs.mul_one_minus({2 * i, 0, 0}, Rat(1));
    }
    for (int64_t i = 0; 2 * i <= pp.u; ++i) rhs.mul_one_minus({2 * i, -2, -2}, Rat(1));
    for (int64_t i = 0; 2 * (i + 1) <= pp.u; ++i) rhs.mul_one_minus({2 * (i + 1), 2, 2}, Rat(1));
    for (int64_t i = 0; 2 * (i + 1) <= pp.u; ++i) rhs.mul_geometric({2 * (i + 1), 2, 0}, Rat(1));
    rhs.mul_geometric({0, 0, -2}, Rat(1));
    for (int64_t i = 1; 2 * i <= pp.u; ++i) rhs.mul_geometric({2 * i, 0, -2}, Rat(1));
    for (int64_t i = 0; 2 * (i + 1) <= pp.u; ++i) rhs.mul_geometric({2 * (i + 1), -2, 0}, Rat(1));
    for (int64_t i = 0; 2 * (i + 1) <= pp.u; ++i) rhs.mul_geometric({2 * (i + 1), 0, 2}, Rat(1));
    if (auto diff = first_difference(lhs, rhs, cmp)) return fail("step 1 (x = qy)", *diff);
  }

  // Step 2: q -> q^2, variables (q, a, y).
  {
    std::vector<std::string> V{"q", "a", "y"};
    Window w{pp.u, {W, W}};
    Window cmp{pp.u, {pp.M, pp.M}};
    Series lhs(V, w);
    {
      Series t = Series::one(V, w);
      t.mul_geometric({0, 2, 0}, Rat(1));
      lhs += t;
      for (int64_t k = 1; 2 * k <= std::max(W, pp.u); ++k) {
        if (4 * k <= pp.u) {
          Series u_ = Series::monomial(V, w, {4 * k, 0, 2 * k});
          u_.mul_geometric({4 * k, 2, 0}, Rat(1));
          lhs += u_;
        }
        if (2 * k <= W) {
          Series v_ = Series::monomial(V, w, {0, -2, -2 * k}, Rat(-1));
          v_.mul_geometric({4 * k, -2, 0}, Rat(1));
          lhs += v_;
        }
      }
    }
    Series rhs = Series::one(V, w);
    rhs.mul_geometric({0, 2, 0}, Rat(1));
    for (int64_t i = 1; 4 * i <= pp.u; ++i) {
      rhs.mul_one_minus({4 * i, 0, 0}, Rat(1));
      rhs.mul_one_minus({4 * i, 0, 0}, Rat(1));
    }
    for (int64_t i = 0; 4 * i <= pp.u; ++i) rhs.mul_one_minus({4 * i, -2, -2}, Rat(1));
    for (int64_t i = 0; 4 * (i + 1) <= pp.u; ++i) rhs.mul_one_minus({4 * (i + 1), 2, 2}, Rat(1));
    for (int64_t i = 0; 4 * (i + 1) <= pp.u; ++i) rhs.mul_geometric({4 * (i + 1), 2, 0}, Rat(1));
    rhs.mul_geometric({0, 0, -2}, Rat(1));
    for (int64_t i = 1; 4 * i <= pp.u; ++i) rhs.mul_geometric({4 * i, 0, -2}, Rat(1));
    for (int64_t i = 0; 4 * (i + 1) <= pp.u; ++i) rhs.mul_geometric({4 * (i + 1), -2, 0}, Rat(1));
    for (int64_t i = 0; 4 * (i + 1) <= pp.u; ++i) rhs.mul_geometric({4 * (i + 1), 0, 2}, Rat(1));
    if (auto diff = first_difference(lhs, rhs, cmp)) return fail("step 2 (q -> q^2)", *diff);
  }

  // Step 3: y = z q^{-3/2}, variables (q, z, a); z is q-dominated here, only
  // a keeps the guard.
  {
    std::vector<std::string> V{"q", "z", "a"};
    Window w{pp.u, {2 * pp.u, W}};
    Window cmp{pp.u, {2 * pp.u, pp.M}};
    Series lhs(V, w);
    {
      Series t = Series::one(V, w);
      t.mul_geometric({0, 0, 2}, Rat(1));
      lhs += t;
      for (int64_t k = 1; k <= pp.u; ++k) {
        Series u_ = Series::monomial(V, w, {k, 2 * k, 0});
        u_.mul_geometric({4 * k, 0, 2}, Rat(1));
        lhs += u_;
        if (3 * k <= pp.u) {
          Series v_ = Series::monomial(V, w, {3 * k, -2 * k, -2}, Rat(-1));
          v_.mul_geometric({4 * k, 0, -2}, Rat(1));
          lhs += v_;
        }
      }
    }
    Series rhs = Series::one(V, w);
    rhs.mul_geometric({0, 0, 2}, Rat(1));
    for (int64_t i = 1; 4 * i <= pp.u; ++i) {
      rhs.mul_one_minus({4 * i, 0, 0}, Rat(1));
      rhs.mul_one_minus({4 * i, 0, 0}, Rat(1));
    }
    for (int64_t i = 0; 3 + 4 * i <= pp.u; ++i) rhs.mul_one_minus({3 + 4 * i, -2, -2}, Rat(1));
    for (int64_t i = 0; 1 + 4 * i <= pp.u; ++i) rhs.mul_one_minus({1 + 4 * i, 2, 2}, Rat(1));
    for (int64_t i = 0; 4 * (i + 1) <= pp.u; ++i) rhs.mul_geometric({4 * (i + 1), 0, 2}, Rat(1));
    for (int64_t i = 0; 3 + 4 * i <= pp.u; ++i) rhs.mul_geometric({3 + 4 * i, -2, 0}, Rat(1));
    for (int64_t i = 0; 4 * (i + 1) <= pp.u; ++i) rhs.mul_geometric({4 * (i + 1), 0, -2}, Rat(1));
    for (int64_t i = 0; 1 + 4 * i <= pp.u; ++i) rhs.mul_geometric({1 + 4 * i, 2, 0}, Rat(1));
    if (auto diff = first_difference(lhs, rhs, cmp)) return fail("step 3 (y = z q^{-3/2})", *diff);
  }

  // Step 4: a = -z^{-1} q^{3/2}, variables (q, z); fully q-dominated, exact.
  int64_t u4 = std::min<int64_t>(N, 24);
  std::vector<std::string> V4{"q", "z"};
  Window w4 = window_qz(u4);
  Series lhs4(V4, w4);
  {
    Series t = Series::one(V4, w4);
    t.mul_geometric({3, -2}, Rat(-1));
    lhs4 += t;
    for (int64_t k = 1; k <= u4; ++k) {
      Series u_ = Series::monomial(V4, w4, {k, 2 * k});
      u_.mul_geometric({4 * k + 3, -2}, Rat(-1));
      lhs4 += u_;
      if (3 * (k - 1) <= u4) {
        Series v_ = Series::monomial(V4, w4, {3 * (k - 1), -2 * (k - 1)});
        v_.mul_geometric({4 * k - 3, 2}, Rat(-1));
        lhs4 += v_;
      }
    }
  }
  Series rhs4 = Series::one(V4, w4);
  {
    rhs4 *= Rat(2);  // (-1; q^2) = 2 prod (1 + q^{2i})
    rhs4.mul_geometric({3, -2}, Rat(-1));
    for (int64_t i = 1; 4 * i <= u4; ++i) {
      rhs4.mul_one_minus({4 * i, 0}, Rat(1));
      rhs4.mul_one_minus({4 * i, 0}, Rat(1));
      rhs4.mul_one_minus({4 * i, 0}, Rat(-1));  // from (-1; q^2)
      rhs4.mul_one_minus({4 * i, 0}, Rat(-1));  // from (-q^2; q^2) = (a z q^{1/2}; q^2)
    }
    for (int64_t i = 0; 7 + 4 * i <= u4; ++i) rhs4.mul_geometric({7 + 4 * i, -2}, Rat(-1));
    for (int64_t i = 0; 3 + 4 * i <= u4; ++i) rhs4.mul_geometric({3 + 4 * i, -2}, Rat(1));
    for (int64_t i = 0; 1 + 4 * i <= u4; ++i) rhs4.mul_geometric({1 + 4 * i, 2}, Rat(-1));
    for (int64_t i = 0; 1 + 4 * i <= u4; ++i) rhs4.mul_geometric({1 + 4 * i, 2}, Rat(1));
  }
  if (auto diff = first_difference(lhs4, rhs4)) return fail("step 4 (a = -z^{-1} q^{3/2})", *diff);

  // Step 5: the chain lands on the identity used by the closed character
  // forms: reindexed sums and the simplified product.
  Series r_lhs = identityR_lhs(u4);
  Series r_rhs = identityR_rhs(u4);
  if (auto diff = first_difference(lhs4, r_lhs)) return fail("step 5 (sum reindexing)", *diff);
  if (auto diff = first_difference(rhs4, r_rhs)) return fail("step 5 (product simplification)", *diff);

  report.pass = true;
  return report;
}

IdentityReport check_crankcounts(IdentityContext& ctx) {
  int64_t N = ctx.order();
  IdentityReport report;
  report.name = "crankcounts";
  report.order = N;
  report.windows = "deg2<=" + std::to_string(N) + ",|charge|<=" + std::to_string(N);
  const CrankTable& table = ctx.crank_table();
  const HwvCounts& counts = ctx.untwisted_counts();
  for (int64_t d2 = 0; d2 <= N; ++d2) {
    for (int32_t m = int32_t(-N); m <= int32_t(N); ++m) {
      int64_t via_crank = hwv_count_via_crank(table, d2, m);
      auto it = counts.by_degree2_charge.find({d2, m});
      int64_t solved = it == counts.by_degree2_charge.end() ? 0 : it->second;
      if (via_crank != solved) {
        report.pass = false;
        report.detail = "count mismatch at (deg2, charge)";
        report.mismatch = SeriesDiff{{d2, m}, Rat(solved), Rat(via_crank)};
        return report;
      }
    }
  }
  report.pass = true;
  return report;
}

using Checker = IdentityReport (*)(IdentityContext&);

const std::vector<std::pair<std::string, Checker>>& registry() {
  static const std::vector<std::pair<std::string, Checker>> r{
      {"dimq", check_dimq},           {"charqz", check_charqz},
      {"qttrace", check_qttrace},     {"triple", check_triple},
      {"hwvchar", check_hwvchar},     {"fullchar", check_fullchar},
      {"identityR", check_identityR}, {"threechars", check_threechars},
      {"cranks", check_cranks},       {"jacobi", check_jacobi},
      {"ramanujan", check_ramanujan}, {"crankcounts", check_crankcounts},
  };
  return r;
}

std::string canonical_name(const std::string& name) {
  std::string k;
  for (char c : name)
    if (c != '-' && c != '_') k += char(std::tolower(static_cast<unsigned char>(c)));
  return k;
}

}  // namespace

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

IdentityReport verify_identity(const std::string& name, IdentityContext& ctx) {
  std::string key = canonical_name(name);
  for (const auto& [rname, fn] : registry())
    if (canonical_name(rname) == key) return fn(ctx);
  throw std::invalid_argument("unknown identity: " + name);
}

IdentityReport verify_identity(const std::string& name, int64_t N) {
  IdentityContext ctx(N);
  return verify_identity(name, ctx);
}

std::vector<IdentityReport> verify_all(int64_t N) {
  IdentityContext ctx(N);
  std::vector<IdentityReport> out;
  for (const auto& [name, fn] : registry()) out.push_back(fn(ctx));
  return out;
}

}  // namespace ckp
