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

#include "matroid/ops.h"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace matroid {

namespace {

void CheckGround(const Matroid& m, const Subset& s) {
  if (s.ground_size() != m.size()) {
    throw std::invalid_argument("ground-set mismatch: subset over " +
                                std::to_string(s.ground_size()) +
                                " elements, matroid over " + std::to_string(m.size()));
  }
}

std::vector<int> Survivors(const Subset& removed) {
  return removed.complement().elements();
}

Matroid Minor(DerivedOp op, const Matroid& m, const Subset& x) {
  CheckGround(m, x);
  DerivedSpec spec{.op = op,
                   .operands = {m},
                   .subset = x,
                   .positions = Survivors(x),
                   .n = m.size() - x.size()};
  return Matroid::FromDerived(std::move(spec));
}

#ifndef NDEBUG
constexpr int kContractSelfCheckLimit = 10;

bool ContractRoutesAgree(const Matroid& by_formula, const Matroid& by_definition) {
  const Mask full = FullMask(by_formula.size());
  for (Mask a = 0;; ++a) {
    if (by_formula.RankBits(a) != by_definition.RankBits(a)) return false;
    if (a == full) break;
  }
  return true;
}
#endif

}  // namespace

Matroid Dual(const Matroid& m) {
  DerivedSpec spec{.op = DerivedOp::kDual, .operands = {m}, .n = m.size()};
  return Matroid::FromDerived(std::move(spec));
}

int DualRank(const Matroid& m, const Subset& f) {
  CheckGround(m, f);
  return f.size() + m.rank(f.complement()) - m.rank();
}

Matroid Delete(const Matroid& m, const Subset& x) {
  return Minor(DerivedOp::kDelete, m, x);
}

Matroid Contract(const Matroid& m, const Subset& x) {
  Matroid result = Minor(DerivedOp::kContract, m, x);
#ifndef NDEBUG
  if (m.size() <= kContractSelfCheckLimit) {
    assert(ContractRoutesAgree(result, ContractByDefinition(m, x)));
  }
#endif
  return result;
}

Matroid ContractByDefinition(const Matroid& m, const Subset& x) {
  return Dual(Delete(Dual(m), x));
}

Matroid Restrict(const Matroid& m, const Subset& c) {
  CheckGround(m, c);
  DerivedSpec spec{.op = DerivedOp::kRestrict,
                   .operands = {m},
                   .subset = c,
                   .positions = c.elements(),
                   .n = c.size()};
  return Matroid::FromDerived(std::move(spec));
}

Subset ProjectToMinor(const Subset& s, const Subset& removed) {
  if (!(s & removed).empty()) {
    throw std::invalid_argument("subset " + s.ToString() + " meets removed set " +
                                removed.ToString());
  }
  std::vector<int> positions = Survivors(removed);
  return Subset(static_cast<int>(positions.size()), CompressMask(s.bits(), positions));
}

Subset LiftFromMinor(const Subset& local, const Subset& removed) {
  std::vector<int> positions = Survivors(removed);
  if (local.ground_size() != static_cast<int>(positions.size())) {
    throw std::invalid_argument("ground-set mismatch lifting from minor");
  }
  return Subset(removed.ground_size(), ExpandMask(local.bits(), positions));
}

Matroid Union(std::span<const Matroid> matroids) {
  if (matroids.empty()) throw std::invalid_argument("union of an empty list");
  int n = CommonGroundSize(matroids);
  DerivedSpec spec{.op = DerivedOp::kUnion,
                   .operands = std::vector<Matroid>(matroids.begin(), matroids.end()),
                   .n = n};
  return Matroid::FromDerived(std::move(spec));
}

Matroid LoopExtend(const Matroid& m, std::vector<int> positions, int universe) {
  if (universe < 0 || universe > kMaxGroundSize) {
    throw std::invalid_argument("universe size " + std::to_string(universe) +
                                " exceeds " + std::to_string(kMaxGroundSize));
  }
  if (static_cast<int>(positions.size()) != m.size()) {
    throw std::invalid_argument("embedding must place every element");
  }
  Mask seen = 0;
  for (int p : positions) {
    if (p < 0 || p >= universe || ((seen >> p) & 1u)) {
      throw std::invalid_argument("embedding is not injective into the universe");
    }
    seen |= Mask{1} << p;
  }
  DerivedSpec spec{.op = DerivedOp::kLoopExtend,
                   .operands = {m},
                   .positions = std::move(positions),
                   .n = universe};
  return Matroid::FromDerived(std::move(spec));
}

Matroid GeneralUnion(std::span<const EmbeddedMatroid> parts, int universe) {
  if (parts.empty()) throw std::invalid_argument("union of an empty list");
  std::vector<Matroid> extended;
  extended.reserve(parts.size());
  for (const EmbeddedMatroid& part : parts) {
    extended.push_back(LoopExtend(part.matroid, part.positions, universe));
  }
  return Union(extended);
}

Subset PartitionWitness::Covered() const {
  if (parts.empty()) return Subset();
  Subset all = Subset::Empty(parts.front().ground_size());
  for (const Subset& p : parts) all = all | p;
  return all;
}

bool PartitionWitness::IsValidFor(std::span<const Matroid> matroids) const {
  if (parts.size() != matroids.size()) return false;
  Mask seen = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].ground_size() != matroids[i].size()) return false;
    if ((parts[i].bits() & seen) != 0) return false;
    if (!matroids[i].IsIndependentBits(parts[i].bits())) return false;
    seen |= parts[i].bits();
  }
  return true;
}

std::optional<PartitionWitness> FindPartitionWitness(std::span<const Matroid> matroids,
                                                     const Subset& x) {
  if (matroids.empty()) throw std::invalid_argument("partition over an empty list");
  const int n = CommonGroundSize(matroids);
  if (x.ground_size() != n) throw std::invalid_argument("ground-set mismatch");
  if (x.size() > kMaxPartitionSearch) {
    throw std::invalid_argument("partition search limited to |X| <= " +
                                std::to_string(kMaxPartitionSearch));
  }
  const std::vector<int> elements = x.elements();
  std::vector<Mask> parts(matroids.size(), 0);

  auto assign = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == elements.size()) return true;
    const Mask bit = Mask{1} << elements[idx];
    for (std::size_t i = 0; i < matroids.size(); ++i) {
      if (!matroids[i].IsIndependentBits(parts[i] | bit)) continue;
      parts[i] |= bit;
      if (self(self, idx + 1)) return true;
      parts[i] &= ~bit;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;

  PartitionWitness witness;
  for (Mask p : parts) witness.parts.emplace_back(n, p);
  return witness;
}

PartitionWitness PeelCover(std::span<const Matroid> matroids,
                           std::span<const Subset> cover) {
  if (cover.size() != matroids.size()) {
    throw std::invalid_argument("cover needs one set per matroid");
  }
  const int n = CommonGroundSize(matroids);
  PartitionWitness witness;
  Mask taken = 0;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (cover[i].ground_size() != n || !matroids[i].IsIndependentBits(cover[i].bits())) {
      throw std::invalid_argument("cover set " + std::to_string(i) +
                                  " is not independent in its matroid");
    }
    // A subset of an independent set stays independent.
    witness.parts.emplace_back(n, cover[i].bits() & ~taken);
    taken |= cover[i].bits();
  }
  return witness;
}

std::optional<PartitionWitness> FindPartitionWitness(std::span<const Matroid> matroids,
                                                     const Subset& x,
                                                     std::span<const Subset> cover) {
  bool usable = cover.size() == matroids.size();
  Mask covered = 0;
  for (std::size_t i = 0; usable && i < cover.size(); ++i) {
    usable = cover[i].ground_size() == x.ground_size() &&
             cover[i].ground_size() == matroids[i].size() &&
             matroids[i].IsIndependentBits(cover[i].bits());
    covered |= cover[i].bits();
  }
  if (usable && covered == x.bits()) return PeelCover(matroids, cover);
  return FindPartitionWitness(matroids, x);
}

}  // namespace matroid
