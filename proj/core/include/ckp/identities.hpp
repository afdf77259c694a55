// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ckp/characters.hpp"
#include "ckp/series.hpp"

namespace ckp {

// Outcome of one registry check. A failing report always carries the first
// mismatching exponent vector (graded-lex) with both coefficients.
struct IdentityReport {
  std::string name;
  int64_t order = 0;       // N: truncation in doubled q exponents
  std::string windows;     // window description actually used
  bool pass = false;
  std::optional<SeriesDiff> mismatch;
  std::string detail;      // which pairwise comparison failed, etc.
};

// Shared inputs cached across registry runs at one order.
class IdentityContext {
 public:
  explicit IdentityContext(int64_t N);

  int64_t order() const { return N_; }
  const HwvCounts& untwisted_counts();
  const HwvCounts& twisted_counts();
  const CrankTable& crank_table();

 private:
  int64_t N_;
  std::optional<HwvCounts> untwisted_;
  std::optional<HwvCounts> twisted_;
  std::optional<CrankTable> crank_;
};

// Fixed registry order. Canonical names:
//   dimq charqz qttrace triple hwvchar fullchar identityR threechars cranks
//   jacobi ramanujan crankcounts
// A few aliases (e.g. "identity-r") are accepted by lookup.
const std::vector<std::string>& registry_names();

IdentityReport verify_identity(const std::string& name, IdentityContext& ctx);
IdentityReport verify_identity(const std::string& name, int64_t N);
std::vector<IdentityReport> verify_all(int64_t N);

}  // namespace ckp
