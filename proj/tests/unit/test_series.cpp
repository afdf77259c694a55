// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "ckp/json_io.hpp"
#include "ckp/series.hpp"

using namespace ckp;

namespace {
const std::vector<std::string> Q{"q"};
const std::vector<std::string> QZ{"q", "z"};
}  // namespace

TEST_CASE("basic arithmetic and windows") {
  Window w{6, {}};
  Series one = Series::one(Q, w);
  Series geom = one;
  geom.mul_geometric({2}, Rat(1));  // 1/(1-q)
  for (int64_t e = 0; e <= 6; e += 2) CHECK(geom.coeff({e}) == Rat(1));
  CHECK(geom.coeff({1}) == Rat(0));

  Series s = Series::monomial(Q, w, {2}, Rat(3));
  s += Series::monomial(Q, w, {2}, Rat(-3));
  CHECK(s.is_zero());

  // Out-of-window terms are dropped silently.
  Series t = Series::monomial(Q, w, {8}, Rat(1));
  CHECK(t.is_zero());
}

TEST_CASE("one-minus and geometric are inverse") {
  Window w{12, {3}};
  Series s = Series::one(QZ, w);
  s.mul_geometric({3, 1}, Rat(-2));
  s.mul_one_minus({3, 1}, Rat(-2));
  CHECK(s == Series::one(QZ, w));
}

TEST_CASE("general inverse") {
  Window w{10, {}};
  Series s = Series::one(Q, w);
  s += Series::monomial(Q, w, {1}, Rat(1));
  s += Series::monomial(Q, w, {3}, Rat(-2, 7));
  Series inv = s.inverse();
  CHECK(s * inv == Series::one(Q, w));
  Series bad = Series::monomial(Q, w, {0}, Rat(2));
  CHECK_THROWS_AS((void)bad.inverse(), std::invalid_argument);
}

TEST_CASE("sum_eval enforces increasing valuations") {
  Window w{8, {}};
  auto term = [&](int64_t k) { return Series::monomial(Q, w, {k}, Rat(1)); };
  Series s = sum_eval(Q, w, term, [](int64_t k) { return k; });
  for (int64_t e = 0; e <= 8; ++e) CHECK(s.coeff({e}) == Rat(1));
  CHECK_THROWS_AS((void)sum_eval(Q, w, term, [](int64_t) { return int64_t(0); }),
                  std::invalid_argument);
}

TEST_CASE("product_eval") {
  Window w{10, {}};
  // prod_{n} 1/(1 - q^n) as factors until the exponent leaves the window.
  Series s = product_eval(Q, w, [&](int64_t n) -> std::optional<Series> {
    if (2 * n > w.u_max) return std::nullopt;
    Series f = Series::one(Q, w);
    f.mul_geometric({2 * n}, Rat(1));
    return f;
  });
  // Partition numbers 1, 1, 2, 3, 5, 7.
  std::vector<int64_t> p{1, 1, 2, 3, 5, 7};
  for (int64_t n = 0; n <= 5; ++n) CHECK(s.coeff({2 * n}) == Rat(p[n]));
}

TEST_CASE("series JSON round trip") {
  Window w{6, {4}};
  Series s(QZ, w);
  s.add_term({0, 0}, Rat(1));
  s.add_term({3, -2}, rat(-7, 3));
  s.add_term({6, 4}, Rat(5));
  nlohmann::json j = series_to_json(s);
  CHECK(j["doubled_exponents"] == true);
  Series back = series_from_json(j);
  CHECK(back == s);
  CHECK(back.vars() == s.vars());
}

TEST_CASE("graded-lex mismatch reporting") {
  Window w{6, {2}};
  Series a = Series::monomial(QZ, w, {2, 0}, Rat(1));
  Series b = Series::monomial(QZ, w, {2, 0}, Rat(2));
  b += Series::monomial(QZ, w, {4, 2}, Rat(1));
  auto d = first_difference(a, b);
  REQUIRE(d.has_value());
  CHECK(d->exponents == Series::ExpVec{2, 0});
  CHECK(d->lhs == Rat(1));
  CHECK(d->rhs == Rat(2));
  // Restricting the comparison window hides the mismatch beyond it.
  auto d2 = first_difference(a, b, Window{6, {1}});
  REQUIRE(d2.has_value());
  CHECK(d2->exponents == Series::ExpVec{2, 0});
}
