// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <utility>

#include "ckp/monomial.hpp"
#include "ckp/rational.hpp"

namespace ckp {

// A finite linear combination of Fock basis monomials with exact rational
// coefficients. Zero coefficients are never stored; equality is coefficient-wise.
// Values are immutable in spirit: all operations return new vectors.
class FockVector {
 public:
  using Terms = std::map<FockMonomial, Rat>;

  FockVector() = default;
  static FockVector vacuum() { return basis(FockMonomial::vacuum()); }
  static FockVector basis(const FockMonomial& m, const Rat& c = Rat(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  Rat coeff(const FockMonomial& m) const;
  void add_term(const FockMonomial& m, const Rat& c);

  // Largest doubled degree over the support (0 for the zero vector).
  int64_t max_degree2() const;
  // True if every monomial in the support has the given doubled degree.
  bool is_homogeneous(int64_t degree2) const;
  // Degree-d2 homogeneous component.
  FockVector component(int64_t degree2) const;

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Rat& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Rat& c, FockVector v) { return v *= c; }
  bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  Terms terms_;
};

// A finite linear combination of pure tensors of basis monomials, the ambient
// space for the Hirota operator.
class TensorVector {
 public:
  using Key = std::pair<FockMonomial, FockMonomial>;
  using Terms = std::map<Key, Rat>;

  TensorVector() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const FockMonomial& a, const FockMonomial& b, const Rat& c);

  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  TensorVector& operator*=(const Rat& c);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  bool operator==(const TensorVector& o) const { return terms_ == o.terms_; }

  // Restriction to bidegrees (d1, d2) with d1 <= b1 and d2 <= b2 (doubled).
  TensorVector bidegree_window(int64_t b1, int64_t b2) const;

  std::string str() const;

 private:
  Terms terms_;
};

// a (x) b
TensorVector tensor_of(const FockVector& a, const FockVector& b);

}  // namespace ckp
