// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matroid/family.h"

#include <algorithm>
#include <stdexcept>

namespace matroid {

Family::Family(int n) : n_(n) {
  CheckGroundSize(n);
  members_.assign(std::size_t{1} << n, 0);
}

Family Family::FromSets(int n, std::span<const Subset> sets) {
  Family f(n);
  for (const Subset& s : sets) {
    if (s.ground_size() != n) throw std::invalid_argument("ground-set mismatch");
    f.insert(s.bits());
  }
  return f;
}

bool Family::contains(const Subset& s) const {
  if (s.ground_size() != n_) throw std::invalid_argument("ground-set mismatch");
  return contains(s.bits());
}

std::size_t Family::count() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), 1));
}

std::vector<Subset> Family::sets() const {
  std::vector<Subset> out;
  for (std::size_t m = 0; m < members_.size(); ++m) {
    if (members_[m]) out.emplace_back(n_, static_cast<Mask>(m));
  }
  return out;
}

bool Family::is_subfamily_of(const Family& o) const {
  if (o.n_ != n_) throw std::invalid_argument("ground-set mismatch");
  for (std::size_t m = 0; m < members_.size(); ++m) {
    if (members_[m] && !o.members_[m]) return false;
  }
  return true;
}

std::optional<Subset> Family::MinimalDifference(const Family& o) const {
  if (o.n_ != n_) throw std::invalid_argument("ground-set mismatch");
  std::optional<Subset> best;
  for (std::size_t m = 0; m < members_.size(); ++m) {
    if (!members_[m] || o.members_[m]) continue;
    auto mask = static_cast<Mask>(m);
    if (!best || Popcount(mask) < best->size()) best = Subset(n_, mask);
  }
  return best;
}

Family DualFamily(const Family& f) {
  const int n = f.ground_size();
  const Mask full = FullMask(n);
  Family dual(n);
  for (Mask m = 0;; ++m) {
    if (f.contains(m)) {
      bool maximal = true;
      for (Mask rest = full & ~m; rest != 0; rest &= rest - 1) {
        if (f.contains(m | (rest & -rest))) {
          maximal = false;
          break;
        }
      }
      if (maximal) dual.insert(full & ~m);
    }
    if (m == full) break;
  }
  // Close downward: one pass per element suffices.
  for (int e = 0; e < n; ++e) {
    const Mask bit = Mask{1} << e;
    for (Mask m = 0;; ++m) {
      if ((m & bit) && dual.contains(m)) dual.insert(m & ~bit);
      if (m == full) break;
    }
  }
  return dual;
}

}  // namespace matroid
