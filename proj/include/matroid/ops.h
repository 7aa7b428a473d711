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

// Dual, minors, restriction and unions. Every result is a lazily evaluated
// Matroid that answers oracle queries through its operands.
//
// Minors and restrictions live on a smaller ground set: the surviving
// elements keep their relative order and are renumbered 0..k-1. Use
// ProjectToMinor / LiftFromMinor to move subsets across.

#ifndef MATROID_OPS_H_
#define MATROID_OPS_H_

#include <optional>
#include <span>
#include <vector>

#include "matroid/matroid.h"
#include "matroid/subset.h"

namespace matroid {

Matroid Dual(const Matroid& m);

// |F| + r(E \ F) - r(E).
int DualRank(const Matroid& m, const Subset& f);

// M \ X, on the elements of E \ X.
Matroid Delete(const Matroid& m, const Subset& x);

// M / X, on the elements of E \ X, with rank r(A u X) - r(X). Debug builds
// check every A against ContractByDefinition for small ground sets.
Matroid Contract(const Matroid& m, const Subset& x);

// (M* \ X)*, the defining construction of contraction.
Matroid ContractByDefinition(const Matroid& m, const Subset& x);

// M|C, on the elements of C.
Matroid Restrict(const Matroid& m, const Subset& c);

// Subset of E \ removed, renumbered onto the minor's ground set.
Subset ProjectToMinor(const Subset& s, const Subset& removed);
Subset LiftFromMinor(const Subset& local, const Subset& removed);

// Matroid of partible sets over a common ground set. Rank evaluates
// min over A subset of X of |X \ A| + sum_i r_i(A) by enumerating A.
Matroid Union(std::span<const Matroid> matroids);

// A matroid together with the universe position of each of its elements.
struct EmbeddedMatroid {
  Matroid matroid;
  std::vector<int> positions;
};

// Extends m to a universe of `universe` elements; elements outside the
// image of `positions` are loops.
Matroid LoopExtend(const Matroid& m, std::vector<int> positions, int universe);

// Union of matroids over different ground sets: loop-extend each one to the
// universe and take the common-ground union.
Matroid GeneralUnion(std::span<const EmbeddedMatroid> parts, int universe);

struct PartitionWitness {
  // parts[i] is independent in the i-th matroid; parts are pairwise disjoint.
  std::vector<Subset> parts;

  Subset Covered() const;
  bool IsValidFor(std::span<const Matroid> matroids) const;
};

inline constexpr int kMaxPartitionSearch = 16;

// Assigns each element of x, in ascending order, to the lowest-indexed
// matroid that keeps its part independent, backtracking on dead ends.
// Returns nullopt when x is not partible. Throws for |x| > 16.
std::optional<PartitionWitness> FindPartitionWitness(std::span<const Matroid> matroids,
                                                     const Subset& x);

// Same, but when `cover` is a list of sets independent in the respective
// matroids whose union is x, the witness is built by peeling: each part
// keeps only the elements not already taken by earlier parts.
std::optional<PartitionWitness> FindPartitionWitness(std::span<const Matroid> matroids,
                                                     const Subset& x,
                                                     std::span<const Subset> cover);

// The peeling refinement itself. Throws if the cover is not made of
// independent sets.
PartitionWitness PeelCover(std::span<const Matroid> matroids,
                           std::span<const Subset> cover);

}  // namespace matroid

#endif  // MATROID_OPS_H_
