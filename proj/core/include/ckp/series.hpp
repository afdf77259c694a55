// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckp/rational.hpp"

namespace ckp {

// Truncation window for a Series: slot 0 is the exponent of u = q^{1/2}
// (doubled q exponent, always >= 0), the remaining slots are auxiliary
// Laurent variables bounded two-sidedly in absolute value. All exponents are
// stored doubled so half-steps like t^{(2n-1)/2} live on an integer lattice.
struct Window {
  int64_t u_max = 0;
  std::vector<int64_t> aux_abs;

  bool contains(const std::vector<int64_t>& e) const;
  std::string str(const std::vector<std::string>& vars) const;
};

// A truncated multivariate formal series with exact rational coefficients:
// integer exponents of u = q^(1/2) and windowed Laurent exponents in the
// auxiliary variables. Arithmetic is exact on the retained window.
class Series {
 public:
  using ExpVec = std::vector<int64_t>;

  // Graded-lex term order: by u exponent, then lexicographic.
  struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
  };
  using Terms = std::map<ExpVec, Rat, GradedLex>;

  Series(std::vector<std::string> vars, Window window);

  static Series one(std::vector<std::string> vars, Window window);
  static Series monomial(std::vector<std::string> vars, Window window, const ExpVec& e,
                         const Rat& c = Rat(1));

  const std::vector<std::string>& vars() const { return vars_; }
  const Window& window() const { return window_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coeff(const ExpVec& e) const;
  // Adds a term, silently dropping exponents outside the window. A negative
  // u exponent is a construction error, not truncation.
  void add_term(const ExpVec& e, const Rat& c);

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rat& c);
  Series operator*(const Series& o) const;
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Rat& c, Series s) { return s *= c; }
  bool operator==(const Series& o) const { return terms_ == o.terms_; }

  // In-place multiply by (1 - c x^e).
  Series& mul_one_minus(const ExpVec& e, const Rat& c);
  // In-place multiply by 1/(1 - c x^e) = sum_j c^j x^{je}; e must be nonzero
  // so the powers eventually leave the window.
  Series& mul_geometric(const ExpVec& e, const Rat& c);

  // General inverse for a series with constant term 1; Neumann iteration with
  // a window-derived step bound. Throws WindowError when the tail does not
  // leave the window, std::invalid_argument when the constant term is not 1.
  Series inverse() const;

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  Window window_;
  Terms terms_;
};

// Multiplies factors gen(1), gen(2), ... until the generator returns nullopt.
Series product_eval(std::vector<std::string> vars, Window w,
                    const std::function<std::optional<Series>(int64_t)>& gen);

// Sums term(0), term(1), ... where valuation(k) is a declared lower bound on
// the u exponent of term(k); the valuations must be strictly increasing so the
// tail provably exceeds the window. Throws std::invalid_argument otherwise.
Series sum_eval(std::vector<std::string> vars, Window w,
                const std::function<Series(int64_t)>& term,
                const std::function<int64_t(int64_t)>& valuation);

// First coefficient difference in graded-lex order, restricted to an optional
// comparison window (used where guarded windows shrink the comparable region).
struct SeriesDiff {
  Series::ExpVec exponents;
  Rat lhs;
  Rat rhs;
};
std::optional<SeriesDiff> first_difference(const Series& a, const Series& b,
                                           const std::optional<Window>& compare_window = {});

}  // namespace ckp
