// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ckp {

// Exact arbitrary-precision rational. Everything in this library is exact;
// there is no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// Parses "3/2", "-7", "1.5" or "0.25" into an exact rational.
Rat parse_rational(const std::string& s);

// Thrown when a composed operator would leave the representable probe window.
class EscapeError : public std::runtime_error {
 public:
  explicit EscapeError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a requested series comparison needs a larger window than supplied.
class WindowError : public std::runtime_error {
 public:
  explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ckp
