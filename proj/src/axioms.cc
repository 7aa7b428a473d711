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

#include "matroid/axioms.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "matroid/independence_system.h"
#include "matroid/kernels.h"
#include "matroid/matroid.h"

namespace matroid {

namespace {

std::string PairString(const std::optional<std::pair<Subset, Subset>>& p) {
  if (!p) return "";
  return " X=" + p->first.ToString() + " Y=" + p->second.ToString();
}

}  // namespace

std::string AxiomReport::ToString() const {
  std::string out;
  out += std::string("M1 ") + (m1 ? "pass" : "FAIL (empty set missing)");
  out += std::string(", M2 ") + (m2 ? "pass" : "FAIL" + PairString(m2_witness));
  out += std::string(", M3 ") + (m3 ? "pass" : "FAIL" + PairString(m3_witness));
  return out;
}

std::string RankPropertyReport::ToString() const {
  std::string out;
  out += std::string("R1 ") + (r1 ? "pass" : "FAIL");
  out += std::string(", R2 ") + (r2 ? "pass" : "FAIL");
  out += std::string(", R3 ") + (r3 ? "pass" : "FAIL");
  if (witness) out += PairString(witness);
  return out;
}

AxiomReport CheckMatroidAxioms(const Family& family) {
  const int n = family.ground_size();
  const Mask full = FullMask(n);
  const std::int64_t count = std::int64_t{1} << n;
  AxiomReport report;

  report.m1 = family.contains(Mask{0});

  std::int64_t y2 = kernels::FirstWhere(count, [&](std::int64_t i) {
    auto y = static_cast<Mask>(i);
    if (!family.contains(y)) return false;
    for (Mask rest = y; rest != 0; rest &= rest - 1) {
      if (!family.contains(y & ~(rest & -rest))) return true;
    }
    return false;
  });
  if (y2 < count) {
    auto y = static_cast<Mask>(y2);
    for (Mask rest = y; rest != 0; rest &= rest - 1) {
      Mask x = y & ~(rest & -rest);
      if (!family.contains(x)) {
        report.m2 = false;
        report.m2_witness = std::make_pair(Subset(n, x), Subset(n, y));
        break;
      }
    }
  }

  // largest[z] = size of the largest member contained in z, or -1.
  std::vector<std::int8_t> largest(static_cast<std::size_t>(count), -1);
  for (Mask z = 0;; ++z) {
    if (family.contains(z)) {
      largest[z] = static_cast<std::int8_t>(Popcount(z));
    } else {
      for (Mask rest = z; rest != 0; rest &= rest - 1) {
        largest[z] = std::max(largest[z], largest[z & ~(rest & -rest)]);
      }
    }
    if (z == full) break;
  }
  auto addable = [&](Mask y) {
    Mask a = 0;
    for (Mask rest = full & ~y; rest != 0; rest &= rest - 1) {
      Mask bit = rest & -rest;
      if (family.contains(y | bit)) a |= bit;
    }
    return a;
  };
  // Y fails exchange iff some member larger than Y avoids every element
  // that can be added to Y.
  std::int64_t y3 = kernels::FirstWhere(count, [&](std::int64_t i) {
    auto y = static_cast<Mask>(i);
    return family.contains(y) && largest[full & ~addable(y)] > Popcount(y);
  });
  if (y3 < count) {
    auto y = static_cast<Mask>(y3);
    Mask z = full & ~addable(y);
    Mask x = 0;
    do {
      if (Popcount(x) > Popcount(y) && family.contains(x)) break;
      x = (x - z) & z;
    } while (x != 0);
    report.m3 = false;
    report.m3_witness = std::make_pair(Subset(n, x), Subset(n, y));
  }
  return report;
}

AxiomReport CheckMatroidAxioms(const IndependenceSystem& system) {
  return CheckMatroidAxioms(system.IndependentSets());
}

RankPropertyReport CheckRankProperties(const Matroid& m) {
  const int n = m.size();
  if (n > kMaxRankPropertyGround) {
    throw std::invalid_argument("rank property check limited to n <= " +
                                std::to_string(kMaxRankPropertyGround));
  }
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<int> r(static_cast<std::size_t>(count));
  kernels::Fill(std::span<int>(r), [&](std::int64_t s) {
    return m.RankBits(static_cast<Mask>(s));
  });

  RankPropertyReport report;
  std::int64_t bad1 = kernels::FirstWhere(count, [&](std::int64_t s) {
    return r[s] > Popcount(static_cast<Mask>(s)) || r[s] < 0;
  });
  auto pair_of = [&](std::int64_t idx) {
    return std::make_pair(Subset(n, static_cast<Mask>(idx >> n)),
                          Subset(n, static_cast<Mask>(idx & (count - 1))));
  };
  std::int64_t bad2 = kernels::FirstWhere(count * count, [&](std::int64_t idx) {
    auto x = static_cast<Mask>(idx >> n);
    auto y = static_cast<Mask>(idx & (count - 1));
    return (x & ~y) == 0 && r[x] > r[y];
  });
  std::int64_t bad3 = kernels::FirstWhere(count * count, [&](std::int64_t idx) {
    auto x = static_cast<Mask>(idx >> n);
    auto y = static_cast<Mask>(idx & (count - 1));
    return r[x | y] + r[x & y] > r[x] + r[y];
  });
  report.r1 = bad1 == count;
  report.r2 = bad2 == count * count;
  report.r3 = bad3 == count * count;
  if (!report.r1) {
    Subset s(n, static_cast<Mask>(bad1));
    report.witness = std::make_pair(s, s);
  } else if (!report.r2) {
    report.witness = pair_of(bad2);
  } else if (!report.r3) {
    report.witness = pair_of(bad3);
  }
  return report;
}

}  // namespace matroid
