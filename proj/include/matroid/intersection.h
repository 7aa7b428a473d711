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

#ifndef MATROID_INTERSECTION_H_
#define MATROID_INTERSECTION_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "matroid/independence_system.h"
#include "matroid/matroid.h"
#include "matroid/subset.h"

namespace matroid {

inline constexpr int kMaxBruteForceGround = 20;
inline constexpr int kMaxIsMatroidGround = 14;
inline constexpr std::int64_t kMaxLevelAssignments = 10'000'000;

// Throws std::invalid_argument if m^n exceeds kMaxLevelAssignments.
std::int64_t LevelAssignmentCount(int m, int n);

// Nested subsets X_0 = X, X_1, ..., X_{m-2} of E; the top level E is
// implicit. For two matroids this is the single set Q.
struct Chain {
  std::vector<Subset> levels;

  bool IsNested() const;
};

struct Optimum {
  int size = 0;
  Subset witness;
};

// The common independent sets of `matroids`, all on one ground set.
IndependenceSystem Intersect(std::span<const Matroid> matroids);

// Scans all 2^n subsets; ties go to the lowest mask. n <= 20.
Optimum MaxCommonIndependentBruteForce(std::span<const Matroid> matroids);

// Two-matroid intersection by shortest augmenting paths in the exchange
// graph. Breadth-first search visits vertices in ascending index order.
Optimum MaxCommonIndependentAugmenting(const Matroid& m1, const Matroid& m2);

struct EdmondsRhs {
  int value = 0;
  Subset argmin;  // lowest mask among minimizers
};

// min over Q of r1(Q) + r2(E \ Q). n <= 20.
EdmondsRhs EdmondsMinMaxRhs(const Matroid& m1, const Matroid& m2);

struct FiltrationRhs {
  int value = 0;
  Chain argmin;
};

// min over chains X subset X_1 subset ... subset X_{m-2} subset E of
//   r_1(X) + r_2(X_1 \ X) + ... + r_m(E \ X_{m-2}),
// enumerated by giving every element a level in 0..m-1. Ties go to the
// first assignment in base-m order with element 0 least significant.
FiltrationRhs FiltrationMinMaxRhs(std::span<const Matroid> matroids);

// Objective value of a given chain.
int FiltrationValue(std::span<const Matroid> matroids, const Chain& chain);

struct MatroidCheck {
  bool is_matroid = true;
  // (X, Y) with |X| > |Y| where no element of X \ Y extends Y.
  std::optional<std::pair<Subset, Subset>> witness;
};

// Exhaustive exchange-axiom check. n <= 14.
MatroidCheck IsMatroid(const IndependenceSystem& system);

// True when the intersections of M_1..M_k are matroids for every
// k = 2..m, in the given order.
bool PrefixIntersectionsAreMatroids(std::span<const Matroid> matroids);

}  // namespace matroid

#endif  // MATROID_INTERSECTION_H_
