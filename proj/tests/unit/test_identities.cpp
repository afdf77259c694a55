// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "ckp/identities.hpp"
#include "ckp/json_io.hpp"

using namespace ckp;

TEST_CASE("registry names and lookup") {
  const auto& names = registry_names();
  REQUIRE(names.size() == 12);
  CHECK(names.front() == "dimq");
  CHECK(names.back() == "crankcounts");
  CHECK_THROWS_AS((void)verify_identity("no-such-identity", 8), std::invalid_argument);
}

TEST_CASE("all identities pass at a small order") {
  auto reports = verify_all(12);
  for (const auto& r : reports) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("identity (2) at order 1: coefficient of q^{1/2} is z on both sides") {
  Series a = char_fock_bruteforce(1);
  Series b = char_fock_product(1);
  CHECK(a.coeff({1, 2}) == Rat(1));
  CHECK(b.coeff({1, 2}) == Rat(1));
  CHECK(a == b);
}

TEST_CASE("reports serialize with witnesses") {
  IdentityReport r = verify_identity("identityR", 8);
  CHECK(r.pass);
  nlohmann::json j = report_to_json(r);
  CHECK(j["status"] == "pass");
  CHECK(j["identity"] == "identityR");
  // A fabricated failing report round-trips its mismatch witness.
  IdentityReport bad;
  bad.name = "x";
  bad.order = 2;
  bad.pass = false;
  bad.mismatch = SeriesDiff{{1, 2}, Rat(1), Rat(2)};
  nlohmann::json jb = report_to_json(bad);
  CHECK(jb["status"] == "fail");
  CHECK(jb["mismatch"]["exponents"] == nlohmann::json::array({1, 2}));
}

TEST_CASE("hwv basis JSON round trip") {
  for (ckp::Algebra alg : {ckp::Algebra::untwisted, ckp::Algebra::twisted}) {
    ckp::HwvBasis basis = ckp::hwv_basis(alg, 5);
    nlohmann::json j = hwv_basis_to_json(basis);
    ckp::HwvBasis back = hwv_basis_from_json(j);
    CHECK(back.degree2 == basis.degree2);
    REQUIRE(back.vectors.size() == basis.vectors.size());
    for (size_t i = 0; i < basis.vectors.size(); ++i) CHECK(back.vectors[i] == basis.vectors[i]);
    CHECK(back.charges == basis.charges);
  }
}
