// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckp/fock_vector.hpp"
#include "ckp/half_odd.hpp"

namespace ckp {

// A degree/charge-filtered linear operator on Fock vectors, defined by its
// action on vectors. degree_shift2/charge_shift are declared metadata
// (doubled degree shift); std::nullopt means "mixed".
struct GradedOperator {
  std::function<FockVector(const FockVector&)> action;
  std::optional<int64_t> degree_shift2;
  std::optional<int32_t> charge_shift;
  std::string label;

  FockVector operator()(const FockVector& v) const { return action(v); }
};

GradedOperator op_chi(HalfOdd n);
GradedOperator op_heis_untwisted(int32_t n);
GradedOperator op_heis_twisted(HalfOdd n);
GradedOperator op_charge();
GradedOperator op_L0();
GradedOperator op_Llambda(const Rat& lambda);
GradedOperator op_Lt0();
GradedOperator op_Lh0(const Rat& a = Rat(0), const Rat& b = Rat(0));

// Matrix of an operator (or commutator) on the basis of all monomials of
// doubled degree <= probe2, represented column-wise over an output basis that
// additionally admits the declared shifts. Output terms outside that window
// raise EscapeError: the probe window must be exact for bracket checks.
class BasisMatrix {
 public:
  BasisMatrix(std::vector<FockMonomial> in_basis, std::vector<FockMonomial> out_basis);

  const std::vector<FockMonomial>& in_basis() const { return in_basis_; }
  const std::vector<FockMonomial>& out_basis() const { return out_basis_; }
  // Sparse column: row index -> coefficient.
  const std::map<int, Rat>& col(size_t j) const { return cols_[j]; }

  void set_column(size_t j, const FockVector& image);

  BasisMatrix& operator-=(const BasisMatrix& o);
  bool is_zero() const;
  // Returns the scalar s when the matrix equals s * identity (square case).
  std::optional<Rat> as_scalar_identity() const;

 private:
  std::vector<FockMonomial> in_basis_;
  std::vector<FockMonomial> out_basis_;
  std::map<FockMonomial, int> out_index_;
  std::vector<std::map<int, Rat>> cols_;
};

// Matrix of A on the degree <= probe2 basis (output window widened by the
// declared degree shift of A).
BasisMatrix operator_matrix(const GradedOperator& a, int64_t probe2);

// Matrix of AB - BA restricted to the degree <= probe2 basis. The caller must
// pick probe2 compatible with the shifts; escapes are errors, never silently
// truncated.
BasisMatrix commutator_table(const GradedOperator& a, const GradedOperator& b, int64_t probe2);

}  // namespace ckp
