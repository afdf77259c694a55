// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/series.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ckp {

bool Window::contains(const std::vector<int64_t>& e) const {
  if (e[0] < 0 || e[0] > u_max) return false;
  for (size_t i = 0; i < aux_abs.size(); ++i)
    if (e[i + 1] < -aux_abs[i] || e[i + 1] > aux_abs[i]) return false;
  return true;
}

std::string Window::str(const std::vector<std::string>& vars) const {
  std::string s = vars.empty() ? "u" : vars[0];
  s += "<=" + std::to_string(u_max);
  for (size_t i = 0; i < aux_abs.size(); ++i)
    s += ",|" + (i + 1 < vars.size() ? vars[i + 1] : "?") + "|<=" + std::to_string(aux_abs[i]);
  s += " (doubled exponents)";
  return s;
}

bool Series::GradedLex::operator()(const ExpVec& a, const ExpVec& b) const {
  if (a[0] != b[0]) return a[0] < b[0];
  return std::lexicographical_compare(a.begin() + 1, a.end(), b.begin() + 1, b.end());
}

Series::Series(std::vector<std::string> vars, Window window)
    : vars_(std::move(vars)), window_(std::move(window)) {
  if (vars_.empty() || vars_[0] != "q")
    throw std::invalid_argument("Series: first variable must be q");
  if (window_.aux_abs.size() + 1 != vars_.size())
    throw std::invalid_argument("Series: window/vars arity mismatch");
}

Series Series::one(std::vector<std::string> vars, Window window) {
  Series s(std::move(vars), std::move(window));
  s.add_term(ExpVec(s.vars_.size(), 0), Rat(1));
  return s;
}

Series Series::monomial(std::vector<std::string> vars, Window window, const ExpVec& e,
                        const Rat& c) {
  Series s(std::move(vars), std::move(window));
  s.add_term(e, c);
  return s;
}

Rat Series::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Series::add_term(const ExpVec& e, const Rat& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("Series: exponent arity mismatch");
  if (e[0] < 0) throw std::logic_error("Series: negative u exponent");
  if (ckp::is_zero(c) || !window_.contains(e)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (ckp::is_zero(it->second)) terms_.erase(it);
  }
}

Series& Series::operator+=(const Series& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Series& Series::operator*=(const Rat& c) {
  if (ckp::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Series Series::operator*(const Series& o) const {
  if (o.vars_ != vars_) throw std::invalid_argument("Series: mixed variable sets");
  Series out(vars_, window_);
  ExpVec e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      if (ea[0] + eb[0] > window_.u_max) break;  // graded order: u only grows
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Series& Series::mul_one_minus(const ExpVec& e, const Rat& c) {
  Series shifted(vars_, window_);
  ExpVec f(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + e[i];
    shifted.add_term(f, ca * c);
  }
  *this -= shifted;
  return *this;
}

Series& Series::mul_geometric(const ExpVec& e, const Rat& c) {
  bool moves = false;
  for (int64_t x : e) moves = moves || (x != 0);
  if (!moves) throw std::invalid_argument("mul_geometric: exponent must be nonzero");
  Series acc(vars_, window_);
  Series frontier = *this;
  ExpVec f(vars_.size());
  while (!frontier.is_zero()) {
    acc += frontier;
    Series next(vars_, window_);
    for (const auto& [ea, ca] : frontier.terms()) {
      for (size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + e[i];
      next.add_term(f, ca * c);
    }
    frontier = std::move(next);
  }
  *this = std::move(acc);
  return *this;
}

Series Series::inverse() const {
  ExpVec zero(vars_.size(), 0);
  if (coeff(zero) != Rat(1))
    throw std::invalid_argument("Series::inverse: constant term must be 1");
  Series t = Series::one(vars_, window_);
  t -= *this;  // t = 1 - s, no constant term inside the window
  int64_t bound = window_.u_max + 1;
  for (int64_t a : window_.aux_abs) bound += 2 * a + 1;
  Series acc = Series::one(vars_, window_);
  Series frontier = Series::one(vars_, window_);
  for (int64_t k = 0; k < bound; ++k) {
    frontier = frontier * t;
    if (frontier.is_zero()) return acc;
    acc += frontier;
  }
  if (!frontier.is_zero()) throw WindowError("Series::inverse: Neumann tail does not leave window");
  return acc;
}

std::string Series::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      s += vars_[i] + "^(" + std::to_string(e[i]) + "/2)";
    }
  }
  return s;
}

Series product_eval(std::vector<std::string> vars, Window w,
                    const std::function<std::optional<Series>(int64_t)>& gen) {
  Series acc = Series::one(std::move(vars), std::move(w));
  for (int64_t i = 1;; ++i) {
    auto factor = gen(i);
    if (!factor) break;
    acc = acc * *factor;
  }
  return acc;
}

Series sum_eval(std::vector<std::string> vars, Window w,
                const std::function<Series(int64_t)>& term,
                const std::function<int64_t(int64_t)>& valuation) {
  Series acc(std::move(vars), std::move(w));
  int64_t prev = -1;
  for (int64_t k = 0;; ++k) {
    int64_t v = valuation(k);
    if (v <= prev) throw std::invalid_argument("sum_eval: valuations must strictly increase");
    prev = v;
    if (v > acc.window().u_max) break;
    acc += term(k);
  }
  return acc;
}

std::optional<SeriesDiff> first_difference(const Series& a, const Series& b,
                                           const std::optional<Window>& compare_window) {
  if (a.vars() != b.vars()) throw std::invalid_argument("first_difference: mixed variable sets");
  auto inside = [&](const Series::ExpVec& e) {
    return !compare_window || compare_window->contains(e);
  };
  auto ita = a.terms().begin(), enda = a.terms().end();
  auto itb = b.terms().begin(), endb = b.terms().end();
  Series::GradedLex less;
  while (ita != enda || itb != endb) {
    if (ita != enda && !inside(ita->first)) {
      ++ita;
      continue;
    }
    if (itb != endb && !inside(itb->first)) {
      ++itb;
      continue;
    }
    if (ita == enda) {
      auto d = SeriesDiff{itb->first, Rat(0), itb->second};
      return d;
    }
    if (itb == endb) {
      auto d = SeriesDiff{ita->first, ita->second, Rat(0)};
      return d;
    }
    if (less(ita->first, itb->first)) {
      return SeriesDiff{ita->first, ita->second, Rat(0)};
    }
    if (less(itb->first, ita->first)) {
      return SeriesDiff{itb->first, Rat(0), itb->second};
    }
    if (ita->second != itb->second) {
      return SeriesDiff{ita->first, ita->second, itb->second};
    }
    ++ita;
    ++itb;
  }
  return std::nullopt;
}

}  // namespace ckp
