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

#ifndef MATROID_INDEPENDENCE_SYSTEM_H_
#define MATROID_INDEPENDENCE_SYSTEM_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "matroid/family.h"
#include "matroid/matroid.h"
#include "matroid/subset.h"

namespace matroid {

// A downward-closed family given by an oracle, typically the common
// independent sets of several matroids. Not necessarily a matroid.
class IndependenceSystem {
 public:
  // The oracle must be a pure function; it may be called concurrently.
  using Oracle = std::function<bool(Mask)>;

  IndependenceSystem(int n, Oracle oracle, std::string provenance,
                     std::vector<Matroid> members = {});

  static IndependenceSystem Of(const Matroid& m);
  // Throws std::invalid_argument if the family misses the empty set or is
  // not downward closed.
  static IndependenceSystem FromFamily(const Family& family, std::string provenance);

  int size() const { return n_; }
  bool is_independent(const Subset& s) const;
  bool IsIndependentBits(Mask bits) const { return oracle_(bits); }

  // Largest independent subset of `s`, by enumeration of its subsets.
  int rank(const Subset& s) const;
  int RankBits(Mask bits) const;

  Family IndependentSets() const;

  const std::string& provenance() const { return provenance_; }
  // The matroids whose intersection this is; empty for other systems.
  std::span<const Matroid> members() const { return members_; }

 private:
  int n_;
  Oracle oracle_;
  std::string provenance_;
  std::vector<Matroid> members_;
};

}  // namespace matroid

#endif  // MATROID_INDEPENDENCE_SYSTEM_H_
