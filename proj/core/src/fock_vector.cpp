// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/fock_vector.hpp"

#include <algorithm>

namespace ckp {

FockVector FockVector::basis(const FockMonomial& m, const Rat& c) {
  FockVector v;
  v.add_term(m, c);
  return v;
}

Rat FockVector::coeff(const FockMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void FockVector::add_term(const FockMonomial& m, const Rat& c) {
  if (ckp::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (ckp::is_zero(it->second)) terms_.erase(it);
  }
}

int64_t FockVector::max_degree2() const {
  int64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree2());
  return d;
}

bool FockVector::is_homogeneous(int64_t degree2) const {
  for (const auto& [m, c] : terms_)
    if (m.degree2() != degree2) return false;
  return true;
}

FockVector FockVector::component(int64_t degree2) const {
  FockVector out;
  for (const auto& [m, c] : terms_)
    if (m.degree2() == degree2) out.add_term(m, c);
  return out;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Rat& c) {
  if (ckp::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string FockVector::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")" + m.str();
  }
  return s;
}

void TensorVector::add_term(const FockMonomial& a, const FockMonomial& b, const Rat& c) {
  if (ckp::is_zero(c)) return;
  Key k{a, b};
  auto [it, inserted] = terms_.emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (ckp::is_zero(it->second)) terms_.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorVector& TensorVector::operator*=(const Rat& c) {
  if (ckp::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TensorVector TensorVector::bidegree_window(int64_t b1, int64_t b2) const {
  TensorVector out;
  for (const auto& [k, c] : terms_)
    if (k.first.degree2() <= b1 && k.second.degree2() <= b2)
      out.add_term(k.first, k.second, c);
  return out;
}

std::string TensorVector::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")" + k.first.str() + "(x)" + k.second.str();
  }
  return s;
}

TensorVector tensor_of(const FockVector& a, const FockVector& b) {
  TensorVector out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma, mb, ca * cb);
  return out;
}

}  // namespace ckp
