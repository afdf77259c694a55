// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ckp/half_odd.hpp"

namespace ckp {

// A basis monomial of the Fock space: a product of creation modes
// chi_{-j_k}^{m_k} ... chi_{-j_1}^{m_1} applied to the vacuum, stored as the
// sorted list of (doubled positive index, multiplicity) pairs. Only creation
// indices are ever stored; annihilators are applied, never kept.
class FockMonomial {
 public:
  struct Part {
    int32_t idx2;  // doubled index, odd and > 0
    int32_t mult;  // >= 1
    friend constexpr auto operator<=>(const Part&, const Part&) = default;
  };

  FockMonomial() = default;  // the vacuum |0>
  explicit FockMonomial(std::vector<Part> parts);

  static const FockMonomial& vacuum();

  const std::vector<Part>& parts() const { return parts_; }
  bool is_vacuum() const { return parts_.empty(); }

  // deg = sum mult*j in (1/2)Z>=0; returned doubled.
  int64_t degree2() const;
  // Eigenvalue of the charge operator h^Z_0.
  int32_t charge() const;
  // Total number of creation factors, counted with multiplicity.
  int32_t part_count() const;

  int32_t multiplicity(int32_t idx2) const;
  int32_t max_idx2() const { return parts_.empty() ? 0 : parts_.back().idx2; }

  FockMonomial with_part_added(int32_t idx2) const;
  // Precondition: multiplicity(idx2) >= 1.
  FockMonomial with_part_removed(int32_t idx2) const;

  // Deterministic order: by degree, then lexicographic on the ascending
  // expanded index list. Used everywhere a reproducible basis is needed.
  bool operator<(const FockMonomial& o) const;
  bool operator==(const FockMonomial& o) const { return parts_ == o.parts_; }

  std::string str() const;

 private:
  std::vector<Part> parts_;
};

}  // namespace ckp
