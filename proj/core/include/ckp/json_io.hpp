// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "ckp/hwv.hpp"
#include "ckp/identities.hpp"
#include "ckp/series.hpp"

#include <json.hpp>

namespace ckp {

// Series wire form:
//   {"vars": [...], "doubled_exponents": true, "truncation": N,
//    "aux_windows": [...], "terms": [[e1, ..., ek, num, den], ...]}
// Terms in canonical graded-lex order, coefficients in lowest terms. Values
// that fit in 53 bits are emitted as JSON integers, larger ones as strings.
nlohmann::json series_to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

// HwvBasis wire form: vectors as lists of [monomial, num, den] with the
// monomial a list of [doubled-index, multiplicity] pairs.
nlohmann::json hwv_basis_to_json(const HwvBasis& basis);
HwvBasis hwv_basis_from_json(const nlohmann::json& j);

nlohmann::json fock_vector_to_json(const FockVector& v);
FockVector fock_vector_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const IdentityReport& r);

}  // namespace ckp
