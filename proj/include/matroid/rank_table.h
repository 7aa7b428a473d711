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

#ifndef MATROID_RANK_TABLE_H_
#define MATROID_RANK_TABLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "matroid/kernels.h"
#include "matroid/matroid.h"

namespace matroid {

// rank of every subset, indexed by mask. The exhaustive scans read these
// instead of calling the oracle 2^n (or m^n) times per matroid.
class RankTable {
 public:
  explicit RankTable(const Matroid& m) : n_(m.size()), ranks_(std::size_t{1} << n_) {
    kernels::Fill(std::span<int>(ranks_), [&](std::int64_t s) {
      return m.RankBits(static_cast<Mask>(s));
    });
  }

  int ground_size() const { return n_; }
  int operator[](Mask s) const { return ranks_[s]; }
  int full() const { return ranks_.back(); }

 private:
  int n_;
  std::vector<int> ranks_;
};

inline std::vector<RankTable> RankTables(std::span<const Matroid> matroids) {
  std::vector<RankTable> tables;
  tables.reserve(matroids.size());
  for (const Matroid& m : matroids) tables.emplace_back(m);
  return tables;
}

}  // namespace matroid

#endif  // MATROID_RANK_TABLE_H_
