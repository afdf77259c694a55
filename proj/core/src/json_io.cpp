// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/json_io.hpp"

#include <stdexcept>

namespace ckp {

namespace {

nlohmann::json int_or_string(const mpz_class& z) {
  if (z.fits_slong_p()) {
    long v = z.get_si();
    if (v <= (1L << 53) && v >= -(1L << 53)) return nlohmann::json(v);
  }
  return nlohmann::json(z.get_str());
}

mpz_class mpz_from_json(const nlohmann::json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  throw std::invalid_argument("expected integer or string for bignum");
}

}  // namespace

nlohmann::json series_to_json(const Series& s) {
  nlohmann::json j;
  j["vars"] = s.vars();
  j["doubled_exponents"] = true;
  j["truncation"] = s.window().u_max;
  j["aux_windows"] = s.window().aux_abs;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) {
    nlohmann::json row = nlohmann::json::array();
    for (int64_t x : e) row.push_back(x);
    row.push_back(int_or_string(c.get_num()));
    row.push_back(int_or_string(c.get_den()));
    terms.push_back(std::move(row));
  }
  j["terms"] = std::move(terms);
  return j;
}

Series series_from_json(const nlohmann::json& j) {
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  Window w;
  w.u_max = j.at("truncation").get<int64_t>();
  w.aux_abs = j.at("aux_windows").get<std::vector<int64_t>>();
  Series s(vars, w);
  for (const auto& row : j.at("terms")) {
    if (row.size() != vars.size() + 2)
      throw std::invalid_argument("series term arity mismatch");
    Series::ExpVec e;
    for (size_t i = 0; i < vars.size(); ++i) e.push_back(row[i].get<int64_t>());
    Rat c(mpz_from_json(row[vars.size()]), mpz_from_json(row[vars.size() + 1]));
    c.canonicalize();
    s.add_term(e, c);
  }
  return s;
}

nlohmann::json fock_vector_to_json(const FockVector& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : v.terms()) {
    nlohmann::json mono = nlohmann::json::array();
    for (const auto& p : m.parts()) mono.push_back({p.idx2, p.mult});
    terms.push_back({std::move(mono), int_or_string(c.get_num()), int_or_string(c.get_den())});
  }
  return terms;
}

FockVector fock_vector_from_json(const nlohmann::json& j) {
  FockVector v;
  for (const auto& term : j) {
    std::vector<FockMonomial::Part> parts;
    for (const auto& p : term.at(0)) parts.push_back({p.at(0).get<int32_t>(), p.at(1).get<int32_t>()});
    Rat c(mpz_from_json(term.at(1)), mpz_from_json(term.at(2)));
    c.canonicalize();
    v.add_term(FockMonomial(std::move(parts)), c);
  }
  return v;
}

nlohmann::json hwv_basis_to_json(const HwvBasis& basis) {
  nlohmann::json j;
  j["algebra"] = basis.algebra == Algebra::untwisted ? "untwisted" : "twisted";
  j["degree2"] = basis.degree2;
  nlohmann::json vecs = nlohmann::json::array();
  for (const auto& v : basis.vectors) vecs.push_back(fock_vector_to_json(v));
  j["vectors"] = std::move(vecs);
  if (basis.algebra == Algebra::untwisted) j["charges"] = basis.charges;
  return j;
}

HwvBasis hwv_basis_from_json(const nlohmann::json& j) {
  HwvBasis basis;
  basis.algebra = j.at("algebra").get<std::string>() == "twisted" ? Algebra::twisted
                                                                  : Algebra::untwisted;
  basis.degree2 = j.at("degree2").get<int64_t>();
  for (const auto& v : j.at("vectors")) basis.vectors.push_back(fock_vector_from_json(v));
  if (j.contains("charges")) basis.charges = j.at("charges").get<std::vector<int32_t>>();
  return basis;
}

nlohmann::json report_to_json(const IdentityReport& r) {
  nlohmann::json j;
  j["identity"] = r.name;
  j["order"] = r.order;
  j["windows"] = r.windows;
  j["status"] = r.pass ? "pass" : "fail";
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.mismatch) {
    nlohmann::json m;
    m["exponents"] = r.mismatch->exponents;
    m["lhs"] = {int_or_string(r.mismatch->lhs.get_num()), int_or_string(r.mismatch->lhs.get_den())};
    m["rhs"] = {int_or_string(r.mismatch->rhs.get_num()), int_or_string(r.mismatch->rhs.get_den())};
    j["mismatch"] = std::move(m);
  }
  return j;
}

}  // namespace ckp
