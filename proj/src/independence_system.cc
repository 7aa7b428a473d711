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

#include "matroid/independence_system.h"

#include <stdexcept>
#include <utility>

#include "matroid/axioms.h"

namespace matroid {

IndependenceSystem::IndependenceSystem(int n, Oracle oracle, std::string provenance,
                                       std::vector<Matroid> members)
    : n_(n),
      oracle_(std::move(oracle)),
      provenance_(std::move(provenance)),
      members_(std::move(members)) {
  CheckGroundSize(n);
}

IndependenceSystem IndependenceSystem::Of(const Matroid& m) {
  return IndependenceSystem(
      m.size(), [m](Mask bits) { return m.IsIndependentBits(bits); }, m.Describe(), {m});
}

IndependenceSystem IndependenceSystem::FromFamily(const Family& family,
                                                  std::string provenance) {
  AxiomReport report = CheckMatroidAxioms(family);
  if (!report.m1 || !report.m2) {
    throw std::invalid_argument("not an independence system: " + report.ToString());
  }
  return IndependenceSystem(
      family.ground_size(), [family](Mask bits) { return family.contains(bits); },
      std::move(provenance));
}

bool IndependenceSystem::is_independent(const Subset& s) const {
  if (s.ground_size() != n_) throw std::invalid_argument("ground-set mismatch");
  return oracle_(s.bits());
}

int IndependenceSystem::rank(const Subset& s) const {
  if (s.ground_size() != n_) throw std::invalid_argument("ground-set mismatch");
  return RankBits(s.bits());
}

int IndependenceSystem::RankBits(Mask bits) const {
  int best = 0;
  for (Mask y = bits;; y = (y - 1) & bits) {
    if (Popcount(y) > best && oracle_(y)) best = Popcount(y);
    if (y == 0) break;
  }
  return best;
}

Family IndependenceSystem::IndependentSets() const {
  return Family::FromPredicate(n_, oracle_);
}

}  // namespace matroid
