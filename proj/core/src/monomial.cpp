// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ckp/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ckp {

FockMonomial::FockMonomial(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].idx2 <= 0 || parts_[i].idx2 % 2 == 0)
      throw std::invalid_argument("FockMonomial: indices must be positive half-odd");
    if (parts_[i].mult < 1) throw std::invalid_argument("FockMonomial: multiplicity < 1");
    if (i > 0 && parts_[i - 1].idx2 >= parts_[i].idx2)
      throw std::invalid_argument("FockMonomial: indices must be strictly increasing");
  }
}

const FockMonomial& FockMonomial::vacuum() {
  static const FockMonomial v;
  return v;
}

int64_t FockMonomial::degree2() const {
  int64_t d = 0;
  for (const auto& p : parts_) d += int64_t(p.mult) * p.idx2;
  return d;
}

int32_t FockMonomial::charge() const {
  int32_t c = 0;
  for (const auto& p : parts_) c += charge_step(HalfOdd(-p.idx2)) * p.mult;
  return c;
}

int32_t FockMonomial::part_count() const {
  int32_t n = 0;
  for (const auto& p : parts_) n += p.mult;
  return n;
}

int32_t FockMonomial::multiplicity(int32_t idx2) const {
  for (const auto& p : parts_)
    if (p.idx2 == idx2) return p.mult;
  return 0;
}

FockMonomial FockMonomial::with_part_added(int32_t idx2) const {
  assert(idx2 > 0 && idx2 % 2 != 0);
  FockMonomial out;
  out.parts_.reserve(parts_.size() + 1);
  bool placed = false;
  for (const auto& p : parts_) {
    if (!placed && idx2 < p.idx2) {
      out.parts_.push_back({idx2, 1});
      placed = true;
    }
    if (p.idx2 == idx2) {
      out.parts_.push_back({p.idx2, p.mult + 1});
      placed = true;
    } else {
      out.parts_.push_back(p);
    }
  }
  if (!placed) out.parts_.push_back({idx2, 1});
  return out;
}

FockMonomial FockMonomial::with_part_removed(int32_t idx2) const {
  FockMonomial out;
  out.parts_.reserve(parts_.size());
  bool found = false;
  for (const auto& p : parts_) {
    if (p.idx2 == idx2) {
      found = true;
      if (p.mult > 1) out.parts_.push_back({p.idx2, p.mult - 1});
    } else {
      out.parts_.push_back(p);
    }
  }
  assert(found);
  (void)found;
  return out;
}

bool FockMonomial::operator<(const FockMonomial& o) const {
  int64_t da = degree2(), db = o.degree2();
  if (da != db) return da < db;
  // Lexicographic comparison of the ascending expanded index lists, done on the
  // run-length representation.
  size_t i = 0, j = 0;
  int32_t ri = 0, rj = 0;  // consumed multiplicity within current part
  while (i < parts_.size() && j < o.parts_.size()) {
    if (parts_[i].idx2 != o.parts_[j].idx2) return parts_[i].idx2 < o.parts_[j].idx2;
    int32_t avail_i = parts_[i].mult - ri;
    int32_t avail_j = o.parts_[j].mult - rj;
    int32_t step = std::min(avail_i, avail_j);
    ri += step;
    rj += step;
    if (ri == parts_[i].mult) {
      ++i;
      ri = 0;
    }
    if (rj == o.parts_[j].mult) {
      ++j;
      rj = 0;
    }
  }
  if (i < parts_.size()) return false;  // o is a proper prefix
  if (j < o.parts_.size()) return true;
  return false;
}

std::string FockMonomial::str() const {
  if (is_vacuum()) return "|0>";
  std::string s;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    s += "x(-" + std::to_string(it->idx2) + "/2)";
    if (it->mult > 1) s += "^" + std::to_string(it->mult);
  }
  s += "|0>";
  return s;
}

}  // namespace ckp
