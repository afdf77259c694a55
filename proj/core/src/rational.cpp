// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/rational.hpp"

namespace ckp {

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t places = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("malformed decimal: " + s);
    mpz_class num(digits);
    mpz_class den(1);
    for (size_t i = 0; i < places; ++i) den *= 10;
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace ckp
