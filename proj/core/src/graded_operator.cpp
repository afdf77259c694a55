// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/graded_operator.hpp"

#include <algorithm>

#include "ckp/heisenberg.hpp"
#include "ckp/modes.hpp"

namespace ckp {

GradedOperator op_chi(HalfOdd n) {
  return {[n](const FockVector& v) { return apply_mode(n, v); }, -n.twice(), charge_step(n),
          "chi(" + n.str() + ")"};
}

GradedOperator op_heis_untwisted(int32_t n) {
  return {[n](const FockVector& v) { return heis_untwisted(n, v); }, -4LL * n, 0,
          "h^Z(" + std::to_string(n) + ")"};
}

GradedOperator op_heis_twisted(HalfOdd n) {
  return {[n](const FockVector& v) { return heis_twisted(n, v); }, -2LL * n.twice(), std::nullopt,
          "h^t(" + n.str() + ")"};
}

GradedOperator op_charge() {
  return {[](const FockVector& v) { return grade_charge(v); }, 0, 0, "h^Z(0)"};
}

GradedOperator op_L0() {
  return {[](const FockVector& v) { return grade_L0(v); }, 0, 0, "L0"};
}

GradedOperator op_Llambda(const Rat& lambda) {
  return {[lambda](const FockVector& v) { return grade_Llambda(lambda, v); }, 0, 0,
          "L0[" + to_string(lambda) + "]"};
}

GradedOperator op_Lt0() {
  // Degree-homogeneous (each h^t_{-n} h^t_n preserves degree) but charge-mixed.
  return {[](const FockVector& v) { return grade_Lt0(v); }, 0, std::nullopt, "Lt0"};
}

GradedOperator op_Lh0(const Rat& a, const Rat& b) {
  // The (b - a - a n) h^Z_n tail makes the operator degree-mixed unless a=b=0.
  std::optional<int64_t> shift2 = 0;
  if (!is_zero(a) || !is_zero(b)) shift2 = std::nullopt;
  return {[a, b](const FockVector& v) { return grade_Lh0(v, a, b); }, shift2, 0, "Lh0"};
}

BasisMatrix::BasisMatrix(std::vector<FockMonomial> in_basis, std::vector<FockMonomial> out_basis)
    : in_basis_(std::move(in_basis)), out_basis_(std::move(out_basis)), cols_(in_basis_.size()) {
  for (size_t i = 0; i < out_basis_.size(); ++i) out_index_[out_basis_[i]] = int(i);
}

void BasisMatrix::set_column(size_t j, const FockVector& image) {
  cols_[j].clear();
  for (const auto& [m, c] : image.terms()) {
    auto it = out_index_.find(m);
    if (it == out_index_.end())
      throw EscapeError("operator output escapes the probe window at " + m.str());
    cols_[j][it->second] = c;
  }
}

BasisMatrix& BasisMatrix::operator-=(const BasisMatrix& o) {
  for (size_t j = 0; j < cols_.size(); ++j) {
    for (const auto& [i, c] : o.cols_[j]) {
      auto [it, inserted] = cols_[j].emplace(i, -c);
      if (!inserted) {
        it->second -= c;
        if (ckp::is_zero(it->second)) cols_[j].erase(it);
      }
    }
  }
  return *this;
}

bool BasisMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
}

std::optional<Rat> BasisMatrix::as_scalar_identity() const {
  Rat s(0);
  bool have = false;
  for (size_t j = 0; j < cols_.size(); ++j) {
    int self = -1;
    auto it = out_index_.find(in_basis_[j]);
    if (it != out_index_.end()) self = it->second;
    for (const auto& [i, c] : cols_[j]) {
      if (i != self) return std::nullopt;
      if (!have) {
        s = c;
        have = true;
      } else if (c != s) {
        return std::nullopt;
      }
    }
    if (cols_[j].empty() && have && !ckp::is_zero(s)) return std::nullopt;
  }
  return s;
}

namespace {

std::vector<FockMonomial> basis_up_to(int64_t probe2) {
  std::vector<FockMonomial> basis;
  for (int64_t d2 = 0; d2 <= probe2; ++d2) {
    auto layer = monomials_of_degree(d2);
    basis.insert(basis.end(), layer.begin(), layer.end());
  }
  return basis;
}

int64_t widen(const GradedOperator& op) {
  return op.degree_shift2 ? std::max<int64_t>(0, *op.degree_shift2) : 0;
}

}  // namespace

BasisMatrix operator_matrix(const GradedOperator& a, int64_t probe2) {
  BasisMatrix m(basis_up_to(probe2), basis_up_to(probe2 + widen(a)));
  for (size_t j = 0; j < m.in_basis().size(); ++j)
    m.set_column(j, a(FockVector::basis(m.in_basis()[j])));
  return m;
}

BasisMatrix commutator_table(const GradedOperator& a, const GradedOperator& b, int64_t probe2) {
  int64_t out2 = probe2 + widen(a) + widen(b);
  BasisMatrix m(basis_up_to(probe2), basis_up_to(out2));
  for (size_t j = 0; j < m.in_basis().size(); ++j) {
    FockVector v = FockVector::basis(m.in_basis()[j]);
    m.set_column(j, a(b(v)) - b(a(v)));
  }
  return m;
}

}  // namespace ckp
