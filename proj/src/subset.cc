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

#include "matroid/subset.h"

#include <stdexcept>

namespace matroid {

void CheckGroundSize(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw std::invalid_argument("ground set size " + std::to_string(n) +
                                " outside [0, " +
                                std::to_string(kMaxGroundSize) + "]");
  }
}

Subset::Subset(int n, Mask bits) : n_(n), bits_(bits) {
  CheckGroundSize(n);
  if ((bits & ~FullMask(n)) != 0) {
    throw std::invalid_argument("subset has elements outside ground set of size " +
                                std::to_string(n));
  }
}

Subset Subset::Of(int n, std::initializer_list<int> elements) {
  return FromIndices(n, std::span<const int>(elements.begin(), elements.size()));
}

Subset Subset::FromIndices(int n, std::span<const int> elements) {
  CheckGroundSize(n);
  Mask bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= n) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " outside ground set of size " +
                                  std::to_string(n));
    }
    bits |= Mask{1} << e;
  }
  return Subset(n, bits);
}

Subset Subset::with(int e) const {
  if (e < 0 || e >= n_) throw std::invalid_argument("element out of range");
  return Subset(n_, bits_ | (Mask{1} << e));
}

Subset Subset::without(int e) const {
  if (e < 0 || e >= n_) throw std::invalid_argument("element out of range");
  return Subset(n_, bits_ & ~(Mask{1} << e));
}

bool Subset::is_subset_of(const Subset& other) const {
  CheckSameGround(other);
  return (bits_ & ~other.bits_) == 0;
}

Subset Subset::operator|(const Subset& o) const {
  CheckSameGround(o);
  return Subset(n_, bits_ | o.bits_);
}

Subset Subset::operator&(const Subset& o) const {
  CheckSameGround(o);
  return Subset(n_, bits_ & o.bits_);
}

Subset Subset::operator-(const Subset& o) const {
  CheckSameGround(o);
  return Subset(n_, bits_ & ~o.bits_);
}

std::vector<int> Subset::elements() const { return MaskElements(bits_); }

std::string Subset::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

void Subset::CheckSameGround(const Subset& o) const {
  if (n_ != o.n_) {
    throw std::invalid_argument("ground-set mismatch: " + std::to_string(n_) +
                                " vs " + std::to_string(o.n_));
  }
}

std::vector<int> MaskElements(Mask m) {
  std::vector<int> out;
  out.reserve(Popcount(m));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask ExpandMask(Mask local, std::span<const int> positions) {
  Mask out = 0;
  while (local != 0) {
    int i = std::countr_zero(local);
    out |= Mask{1} << positions[i];
    local &= local - 1;
  }
  return out;
}

Mask CompressMask(Mask global, std::span<const int> positions) {
  Mask out = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if ((global >> positions[i]) & 1u) out |= Mask{1} << i;
  }
  return out;
}

}  // namespace matroid
