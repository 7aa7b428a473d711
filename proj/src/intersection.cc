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

#include "matroid/intersection.h"

#include <deque>
#include <stdexcept>
#include <string>

#include "matroid/axioms.h"
#include "matroid/kernels.h"
#include "matroid/rank_table.h"

namespace matroid {

namespace {

void CheckBruteForceSize(int n, const char* what) {
  if (n > kMaxBruteForceGround) {
    throw std::invalid_argument(std::string(what) + " limited to n <= " +
                                std::to_string(kMaxBruteForceGround));
  }
}

}  // namespace

std::int64_t LevelAssignmentCount(int m, int n) {
  std::int64_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= m;
    if (count > kMaxLevelAssignments) {
      throw std::invalid_argument(std::to_string(m) + "^" + std::to_string(n) +
                                  " level assignments exceed the enumeration cap");
    }
  }
  return count;
}

bool Chain::IsNested() const {
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (!levels[i - 1].is_subset_of(levels[i])) return false;
  }
  return true;
}

IndependenceSystem Intersect(std::span<const Matroid> matroids) {
  if (matroids.empty()) throw std::invalid_argument("intersection of an empty list");
  const int n = CommonGroundSize(matroids);
  std::vector<Matroid> members(matroids.begin(), matroids.end());
  std::string provenance = "intersection(";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) provenance += ",";
    provenance += members[i].Describe();
  }
  provenance += ")";
  return IndependenceSystem(
      n,
      [members](Mask bits) {
        for (const Matroid& m : members) {
          if (!m.IsIndependentBits(bits)) return false;
        }
        return true;
      },
      std::move(provenance), members);
}

Optimum MaxCommonIndependentBruteForce(std::span<const Matroid> matroids) {
  if (matroids.empty()) throw std::invalid_argument("intersection of an empty list");
  const int n = CommonGroundSize(matroids);
  CheckBruteForceSize(n, "brute-force intersection");
  kernels::Best best = kernels::ArgMax(std::int64_t{1} << n, [&](std::int64_t i) {
    auto s = static_cast<Mask>(i);
    for (const Matroid& m : matroids) {
      if (!m.IsIndependentBits(s)) return std::int64_t{-1};
    }
    return std::int64_t{Popcount(s)};
  });
  return Optimum{static_cast<int>(best.value), Subset(n, static_cast<Mask>(best.index))};
}

Optimum MaxCommonIndependentAugmenting(const Matroid& m1, const Matroid& m2) {
  const Matroid pair[] = {m1, m2};
  const int n = CommonGroundSize(pair);
  Mask current = 0;
  std::vector<int> parent(n);
  std::vector<char> visited(n);
  while (true) {
    Mask sources = 0;
    Mask sinks = 0;
    for (int x = 0; x < n; ++x) {
      Mask bit = Mask{1} << x;
      if (current & bit) continue;
      if (m1.IsIndependentBits(current | bit)) sources |= bit;
      if (m2.IsIndependentBits(current | bit)) sinks |= bit;
    }
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(visited.begin(), visited.end(), 0);
    std::deque<int> queue;
    for (int x : MaskElements(sources)) {
      visited[x] = 1;
      queue.push_back(x);
    }
    int end = -1;
    while (!queue.empty() && end < 0) {
      int u = queue.front();
      queue.pop_front();
      Mask ubit = Mask{1} << u;
      if ((sinks & ubit) != 0) {
        end = u;
        break;
      }
      for (int v = 0; v < n; ++v) {
        if (visited[v]) continue;
        Mask vbit = Mask{1} << v;
        bool arc = false;
        if (current & ubit) {
          // y -> x when I - y + x is independent in M1.
          arc = !(current & vbit) && m1.IsIndependentBits((current & ~ubit) | vbit);
        } else {
          // x -> y when I - y + x is independent in M2.
          arc = (current & vbit) && m2.IsIndependentBits((current & ~vbit) | ubit);
        }
        if (arc) {
          visited[v] = 1;
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (end < 0) break;
    for (int v = end; v >= 0; v = parent[v]) current ^= Mask{1} << v;
  }
  return Optimum{Popcount(current), Subset(n, current)};
}

EdmondsRhs EdmondsMinMaxRhs(const Matroid& m1, const Matroid& m2) {
  const Matroid pair[] = {m1, m2};
  const int n = CommonGroundSize(pair);
  CheckBruteForceSize(n, "min-max evaluation");
  const RankTable r1(m1);
  const RankTable r2(m2);
  const Mask full = FullMask(n);
  kernels::Best best = kernels::ArgMin(std::int64_t{1} << n, [&](std::int64_t i) {
    auto q = static_cast<Mask>(i);
    return std::int64_t{r1[q] + r2[full & ~q]};
  });
  return EdmondsRhs{static_cast<int>(best.value), Subset(n, static_cast<Mask>(best.index))};
}

namespace {

constexpr int kMaxLevels = 32;

// Splits assignment index `idx` (base m, element 0 least significant) into
// per-level masks.
void DecodeLevels(std::int64_t idx, int n, int m, std::span<Mask> levels) {
  std::fill(levels.begin(), levels.end(), Mask{0});
  for (int e = 0; e < n; ++e) {
    levels[idx % m] |= Mask{1} << e;
    idx /= m;
  }
}

}  // namespace

FiltrationRhs FiltrationMinMaxRhs(std::span<const Matroid> matroids) {
  const int m = static_cast<int>(matroids.size());
  if (m < 2) throw std::invalid_argument("filtration min-max needs at least two matroids");
  if (m > kMaxLevels) throw std::invalid_argument("too many matroids for level enumeration");
  const int n = CommonGroundSize(matroids);
  const std::int64_t count = LevelAssignmentCount(m, n);
  const std::vector<RankTable> tables = RankTables(matroids);
  kernels::Best best = kernels::ArgMin(count, [&](std::int64_t idx) {
    Mask levels[kMaxLevels];
    DecodeLevels(idx, n, m, std::span<Mask>(levels, m));
    std::int64_t value = 0;
    for (int i = 0; i < m; ++i) value += tables[i][levels[i]];
    return value;
  });
  std::vector<Mask> levels(m);
  DecodeLevels(best.index, n, m, levels);
  FiltrationRhs out;
  out.value = static_cast<int>(best.value);
  Mask prefix = 0;
  for (int i = 0; i + 1 < m; ++i) {
    prefix |= levels[i];
    out.argmin.levels.emplace_back(n, prefix);
  }
  return out;
}

int FiltrationValue(std::span<const Matroid> matroids, const Chain& chain) {
  const int n = CommonGroundSize(matroids);
  if (chain.levels.size() + 1 != matroids.size()) {
    throw std::invalid_argument("chain needs m-1 levels for m matroids");
  }
  if (!chain.IsNested()) throw std::invalid_argument("chain levels are not nested");
  Mask below = 0;
  int value = 0;
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    if (chain.levels[i].ground_size() != n) throw std::invalid_argument("ground-set mismatch");
    value += matroids[i].RankBits(chain.levels[i].bits() & ~below);
    below = chain.levels[i].bits();
  }
  value += matroids.back().RankBits(FullMask(n) & ~below);
  return value;
}

MatroidCheck IsMatroid(const IndependenceSystem& system) {
  if (system.size() > kMaxIsMatroidGround) {
    throw std::invalid_argument("matroid check limited to n <= " +
                                std::to_string(kMaxIsMatroidGround));
  }
  AxiomReport report = CheckMatroidAxioms(system);
  MatroidCheck out;
  out.is_matroid = report.m3;
  out.witness = report.m3_witness;
  return out;
}

bool PrefixIntersectionsAreMatroids(std::span<const Matroid> matroids) {
  for (std::size_t k = 2; k <= matroids.size(); ++k) {
    if (!IsMatroid(Intersect(matroids.first(k))).is_matroid) return false;
  }
  return true;
}

}  // namespace matroid
