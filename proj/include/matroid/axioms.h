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

#ifndef MATROID_AXIOMS_H_
#define MATROID_AXIOMS_H_

#include <optional>
#include <string>
#include <utility>

#include "matroid/family.h"
#include "matroid/subset.h"

namespace matroid {

class Matroid;
class IndependenceSystem;

struct AxiomReport {
  bool m1 = true;  // empty set present
  bool m2 = true;  // downward closed
  bool m3 = true;  // exchange
  // (X, Y): Y in the family, X = Y minus one element, X missing.
  std::optional<std::pair<Subset, Subset>> m2_witness;
  // (X, Y): both in the family, |X| > |Y|, and Y + x is missing for every
  // x in X \ Y.
  std::optional<std::pair<Subset, Subset>> m3_witness;

  bool ok() const { return m1 && m2 && m3; }
  std::string ToString() const;
};

// Exhaustive check over all 2^n sets. Witnesses are the first failures with
// Y scanned in ascending mask order, then X in ascending mask order.
AxiomReport CheckMatroidAxioms(const Family& family);
AxiomReport CheckMatroidAxioms(const IndependenceSystem& system);

struct RankPropertyReport {
  bool r1 = true;  // r(X) <= |X|
  bool r2 = true;  // X subset of Y implies r(X) <= r(Y)
  bool r3 = true;  // r(X u Y) + r(X n Y) <= r(X) + r(Y)
  // First violating (X, Y) for the first property that fails; for r1, Y = X.
  std::optional<std::pair<Subset, Subset>> witness;

  bool ok() const { return r1 && r2 && r3; }
  std::string ToString() const;
};

inline constexpr int kMaxRankPropertyGround = 12;

// All pairs X, Y of subsets of E. Throws std::invalid_argument for
// n > kMaxRankPropertyGround.
RankPropertyReport CheckRankProperties(const Matroid& m);

}  // namespace matroid

#endif  // MATROID_AXIOMS_H_
