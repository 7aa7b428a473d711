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

#ifndef MATROID_SUBSET_H_
#define MATROID_SUBSET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace matroid {

using Mask = std::uint32_t;

// Largest ground set any construction accepts. Exhaustive operations
// declare their own, smaller caps.
inline constexpr int kMaxGroundSize = 24;

inline constexpr Mask FullMask(int n) {
  return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline int Popcount(Mask m) { return std::popcount(m); }

// Throws std::invalid_argument unless 0 <= n <= kMaxGroundSize.
void CheckGroundSize(int n);

// A subset of the ground set {0, ..., n-1}. The ground-set size travels
// with the mask so that operations on mismatched ground sets are caught.
class Subset {
 public:
  Subset() = default;
  Subset(int n, Mask bits);

  static Subset Empty(int n) { return Subset(n, 0); }
  static Subset Full(int n) { return Subset(n, FullMask(n)); }
  static Subset Of(int n, std::initializer_list<int> elements);
  static Subset FromIndices(int n, std::span<const int> elements);

  int ground_size() const { return n_; }
  Mask bits() const { return bits_; }
  int size() const { return Popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int e) const { return e >= 0 && e < n_ && ((bits_ >> e) & 1u); }

  Subset with(int e) const;
  Subset without(int e) const;
  Subset complement() const { return Subset(n_, FullMask(n_) & ~bits_); }
  bool is_subset_of(const Subset& other) const;

  Subset operator|(const Subset& o) const;
  Subset operator&(const Subset& o) const;
  Subset operator-(const Subset& o) const;
  bool operator==(const Subset& o) const = default;

  std::vector<int> elements() const;
  // "{0,2,5}"
  std::string ToString() const;

 private:
  void CheckSameGround(const Subset& o) const;

  int n_ = 0;
  Mask bits_ = 0;
};

std::vector<int> MaskElements(Mask m);

// Maps a mask over `positions.size()` local elements into the mask over the
// larger set whose element i sits at positions[i].
Mask ExpandMask(Mask local, std::span<const int> positions);

// Inverse of ExpandMask on the image; bits outside `positions` are dropped.
Mask CompressMask(Mask global, std::span<const int> positions);

}  // namespace matroid

#endif  // MATROID_SUBSET_H_
