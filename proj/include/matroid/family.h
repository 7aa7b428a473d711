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

#ifndef MATROID_FAMILY_H_
#define MATROID_FAMILY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "matroid/kernels.h"
#include "matroid/subset.h"

namespace matroid {

// A family of subsets of {0..n-1}, stored as a membership bitmap indexed by
// mask. Used to materialize and compare independence families.
class Family {
 public:
  explicit Family(int n);

  static Family FromSets(int n, std::span<const Subset> sets);

  template <class Predicate>
  static Family FromPredicate(int n, Predicate&& pred) {
    Family f(n);
    kernels::Fill(std::span<std::uint8_t>(f.members_), [&](std::int64_t m) {
      return static_cast<std::uint8_t>(pred(static_cast<Mask>(m)) ? 1 : 0);
    });
    return f;
  }

  int ground_size() const { return n_; }
  bool contains(Mask m) const { return members_[m] != 0; }
  bool contains(const Subset& s) const;
  void insert(Mask m) { members_[m] = 1; }
  std::size_t count() const;

  // Members in ascending mask order.
  std::vector<Subset> sets() const;

  bool operator==(const Family& o) const = default;
  bool is_subfamily_of(const Family& o) const;

  // Smallest member of *this missing from `o`: least cardinality, then
  // least mask.
  std::optional<Subset> MinimalDifference(const Family& o) const;

 private:
  int n_;
  std::vector<std::uint8_t> members_;
};

// The family of sets disjoint from some inclusion-maximal member of `f`.
// For a matroid this is the dual family; for an independence system it is
// the dual in the same sense.
Family DualFamily(const Family& f);

}  // namespace matroid

#endif  // MATROID_FAMILY_H_
