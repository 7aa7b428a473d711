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

#include "matroid/bounds.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "matroid/family.h"
#include "matroid/intersection.h"
#include "matroid/kernels.h"
#include "matroid/ops.h"
#include "matroid/rank_table.h"

namespace matroid {

namespace {

int CheckedGround(std::span<const Matroid> matroids, int cap, const char* what) {
  if (matroids.empty()) throw std::invalid_argument(std::string(what) + " needs matroids");
  const int n = CommonGroundSize(matroids);
  if (n > cap) {
    throw std::invalid_argument(std::string(what) + " limited to n <= " +
                                std::to_string(cap));
  }
  return n;
}

void CheckSubset(const Subset& s, int n) {
  if (s.ground_size() != n) throw std::invalid_argument("ground-set mismatch");
}

int SumFullRanks(std::span<const RankTable> tables) {
  int total = 0;
  for (const RankTable& t : tables) total += t.full();
  return total;
}

std::vector<Mask> Complements(const CoveringBases& ts, int n) {
  std::vector<Mask> out;
  for (const Subset& t : ts.ts) out.push_back(FullMask(n) & ~t.bits());
  return out;
}

void RequireBases(std::span<const Matroid> matroids, const CoveringBases& ts) {
  if (!AreBases(matroids, ts.ts)) {
    throw std::invalid_argument("each T_i must be a basis of the i-th matroid");
  }
}

// E \ (A n T_i^c) for each i, summed through the rank tables.
int SumRanksOutside(std::span<const RankTable> tables, std::span<const Mask> complements,
                    Mask a, Mask full) {
  int total = 0;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    total += tables[i][full & ~(a & complements[i])];
  }
  return total;
}

int SumOverlaps(std::span<const Mask> complements, Mask a) {
  int total = 0;
  for (Mask c : complements) total += Popcount(a & c);
  return total;
}

Family UnionOfDualsFamily(std::span<const Matroid> matroids) {
  std::vector<Matroid> duals;
  for (const Matroid& m : matroids) duals.push_back(Dual(m));
  return Union(duals).IndependentSets();
}

Matroid ContractedUnion(std::span<const Matroid> matroids, const CoveringBases& ts, int n) {
  std::vector<EmbeddedMatroid> parts;
  for (std::size_t i = 0; i < matroids.size(); ++i) {
    parts.push_back({Dual(Contract(matroids[i], ts.ts[i])), ts.ts[i].complement().elements()});
  }
  return GeneralUnion(parts, n);
}

ContainmentReport CompareFamilies(const Family& lhs, const Family& rhs) {
  ContainmentReport report;
  report.violation = lhs.MinimalDifference(rhs);
  report.holds = !report.violation.has_value();
  report.strict_witness = rhs.MinimalDifference(lhs);
  report.strict = report.holds && report.strict_witness.has_value();
  return report;
}

Family DualOfIntersection(std::span<const Matroid> matroids) {
  return DualFamily(Intersect(matroids).IndependentSets());
}

}  // namespace

PartitionBound UpperBoundPartition(std::span<const Matroid> matroids) {
  const int n = CheckedGround(matroids, kMaxGroundSize, "partition upper bound");
  const int m = static_cast<int>(matroids.size());
  constexpr int kMaxParts = 32;
  if (m > kMaxParts) throw std::invalid_argument("too many matroids for partition search");
  const std::int64_t count = LevelAssignmentCount(m, n);
  const std::vector<RankTable> tables = RankTables(matroids);
  auto decode = [n, m](std::int64_t idx, Mask* parts) {
    std::fill(parts, parts + m, Mask{0});
    for (int e = 0; e < n; ++e) {
      parts[idx % m] |= Mask{1} << e;
      idx /= m;
    }
  };
  kernels::Best best = kernels::ArgMin(count, [&](std::int64_t idx) {
    Mask parts[kMaxParts];
    decode(idx, parts);
    std::int64_t value = 0;
    for (int i = 0; i < m; ++i) value += tables[i][parts[i]];
    return value;
  });
  PartitionBound out;
  out.value = static_cast<int>(best.value);
  Mask parts[kMaxParts];
  decode(best.index, parts);
  for (int i = 0; i < m; ++i) out.parts.emplace_back(n, parts[i]);
  return out;
}

int DualUnionTerm(std::span<const Matroid> matroids, const Subset& a) {
  const int n = CommonGroundSize(matroids);
  CheckSubset(a, n);
  const int m = static_cast<int>(matroids.size());
  int value = -(m - 1) * a.size();
  for (const Matroid& mat : matroids) value += mat.rank() - mat.RankBits(a.complement().bits());
  return value;
}

DualUnionBound LowerBoundDualUnion(std::span<const Matroid> matroids) {
  const int n = CheckedGround(matroids, kMaxSubsetScanGround, "dual-union lower bound");
  const int m = static_cast<int>(matroids.size());
  const std::vector<RankTable> tables = RankTables(matroids);
  const int total = SumFullRanks(tables);
  const Mask full = FullMask(n);
  kernels::Best best = kernels::ArgMax(std::int64_t{1} << n, [&](std::int64_t i) {
    auto a = static_cast<Mask>(i);
    std::int64_t value = total - (m - 1) * Popcount(a);
    for (const RankTable& t : tables) value -= t[full & ~a];
    return value;
  });
  DualUnionBound out;
  out.raw = static_cast<int>(best.value);
  out.clamped = std::max(out.raw, 0);
  out.argmax = Subset(n, static_cast<Mask>(best.index));
  return out;
}

int DualRankBoundTerm(std::span<const Matroid> matroids, const Subset& x, const Subset& a) {
  const int n = CommonGroundSize(matroids);
  CheckSubset(x, n);
  CheckSubset(a, n);
  const int m = static_cast<int>(matroids.size());
  int value = x.size() + (m - 1) * a.size();
  for (const Matroid& mat : matroids) value += mat.RankBits(a.complement().bits()) - mat.rank();
  return value;
}

DualRankBound DualRankUpperBound(std::span<const Matroid> matroids, const Subset& x) {
  const int n = CheckedGround(matroids, kMaxSubsetScanGround, "dual rank bound");
  CheckSubset(x, n);
  const int m = static_cast<int>(matroids.size());
  const std::vector<RankTable> tables = RankTables(matroids);
  const int total = SumFullRanks(tables);
  const Mask full = FullMask(n);
  auto term = [&](Mask a) {
    std::int64_t value = x.size() + (m - 1) * Popcount(a) - total;
    for (const RankTable& t : tables) value += t[full & ~a];
    return value;
  };
  DualRankBound out;
  out.min_over_all_subsets = static_cast<int>(
      kernels::ArgMin(std::int64_t{1} << n, [&](std::int64_t i) {
        return term(static_cast<Mask>(i));
      }).value);
  std::int64_t best = term(0);
  for (Mask a = x.bits(); a != 0; a = (a - 1) & x.bits()) best = std::min(best, term(a));
  out.min_over_subsets_of_x = static_cast<int>(best);

  const Family dual = DualOfIntersection(matroids);
  int rank = 0;
  for (Mask y = x.bits();; y = (y - 1) & x.bits()) {
    if (dual.contains(y)) rank = std::max(rank, Popcount(y));
    if (y == 0) break;
  }
  out.dual_rank = rank;
  return out;
}

bool AreBases(std::span<const Matroid> matroids, std::span<const Subset> ts) {
  if (ts.size() != matroids.size()) return false;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].ground_size() != matroids[i].size()) return false;
    if (!matroids[i].IsIndependentBits(ts[i].bits())) return false;
    if (ts[i].size() != matroids[i].rank()) return false;
  }
  return true;
}

bool IsCoveringCocovering(std::span<const Subset> ts, int n) {
  Mask covered = 0;
  Mask common = FullMask(n);
  for (const Subset& t : ts) {
    if (t.ground_size() != n) return false;
    covered |= t.bits();
    common &= t.bits();
  }
  // The complements cover E exactly when no element lies in every T_i.
  return covered == FullMask(n) && common == 0;
}

CoveringSearch FindCoveringCocoveringBases(std::span<const Matroid> matroids,
                                           std::uint64_t seed, int restarts) {
  const int n = CheckedGround(matroids, kMaxSubsetScanGround, "covering bases search");
  const Mask full = FullMask(n);
  CoveringSearch result;

  std::vector<std::vector<Mask>> bases(matroids.size());
  std::int64_t product = 1;
  bool small = true;
  for (std::size_t i = 0; i < matroids.size(); ++i) {
    const RankTable table(matroids[i]);
    const int r = table.full();
    for (Mask s = 0;; ++s) {
      if (Popcount(s) == r && table[s] == r) bases[i].push_back(s);
      if (s == full) break;
    }
    product *= static_cast<std::int64_t>(bases[i].size());
    if (product > kMaxBasisProduct) small = false;
  }

  auto accept = [&](const std::vector<Mask>& chosen) {
    CoveringBases cb;
    for (Mask t : chosen) cb.ts.emplace_back(n, t);
    result.bases = std::move(cb);
  };

  if (small) {
    result.exhaustive = true;
    std::vector<std::size_t> idx(matroids.size(), 0);
    std::vector<Mask> chosen(matroids.size());
    while (true) {
      Mask covered = 0;
      Mask common = full;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        chosen[i] = bases[i][idx[i]];
        covered |= chosen[i];
        common &= chosen[i];
      }
      if (covered == full && common == 0) {
        accept(chosen);
        return result;
      }
      // Odometer with the last matroid varying fastest.
      std::size_t pos = idx.size();
      while (pos > 0) {
        --pos;
        if (++idx[pos] < bases[pos].size()) break;
        idx[pos] = 0;
        if (pos == 0) return result;
      }
      if (idx.empty()) return result;
    }
  }

  // Greedy restarts: each T_i prefers elements no earlier T covers and
  // avoids elements every earlier T contains.
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  std::vector<Mask> chosen(matroids.size());
  for (int attempt = 0; attempt < restarts; ++attempt) {
    Mask covered = 0;
    Mask common = full;
    for (std::size_t i = 0; i < matroids.size(); ++i) {
      for (int e = 0; e < n; ++e) order[e] = e;
      std::shuffle(order.begin(), order.end(), rng);
      auto category = [&](int e) {
        Mask bit = Mask{1} << e;
        if (!(covered & bit)) return 0;
        if (i > 0 && (common & bit)) return 2;
        return 1;
      };
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return category(a) < category(b); });
      Mask t = 0;
      for (int e : order) {
        if (matroids[i].IsIndependentBits(t | (Mask{1} << e))) t |= Mask{1} << e;
      }
      chosen[i] = t;
      covered |= t;
      common &= t;
    }
    if (covered == full && common == 0) {
      accept(chosen);
      return result;
    }
  }
  return result;
}

int PrintedContractedTerm(std::span<const Matroid> matroids, const CoveringBases& ts,
                          const Subset& a) {
  const int n = CommonGroundSize(matroids);
  CheckSubset(a, n);
  RequireBases(matroids, ts);
  const int m = static_cast<int>(matroids.size());
  const std::vector<Mask> comp = Complements(ts, n);
  int value = -(m - 1) * a.size();
  for (std::size_t i = 0; i < matroids.size(); ++i) {
    value += 2 * matroids[i].rank() - matroids[i].RankBits(FullMask(n) & ~(a.bits() & comp[i]));
  }
  return value;
}

ContractedBound LowerBoundContractedPrinted(std::span<const Matroid> matroids,
                                            const CoveringBases& ts) {
  const int n = CheckedGround(matroids, kMaxSubsetScanGround, "contracted bound");
  RequireBases(matroids, ts);
  const int m = static_cast<int>(matroids.size());
  const std::vector<RankTable> tables = RankTables(matroids);
  const std::vector<Mask> comp = Complements(ts, n);
  const int total = SumFullRanks(tables);
  const Mask full = FullMask(n);
  kernels::Best best = kernels::ArgMax(std::int64_t{1} << n, [&](std::int64_t i) {
    auto a = static_cast<Mask>(i);
    return std::int64_t{2 * total - (m - 1) * Popcount(a) -
                        SumRanksOutside(tables, comp, a, full)};
  });
  return ContractedBound{static_cast<int>(best.value), Subset(n, static_cast<Mask>(best.index))};
}

int DerivedContractedTerm(std::span<const Matroid> matroids, const CoveringBases& ts,
                          const Subset& a) {
  const int n = CommonGroundSize(matroids);
  CheckSubset(a, n);
  RequireBases(matroids, ts);
  const std::vector<Mask> comp = Complements(ts, n);
  int value = a.size() - SumOverlaps(comp, a.bits());
  for (std::size_t i = 0; i < matroids.size(); ++i) {
    value += matroids[i].rank() - matroids[i].RankBits(FullMask(n) & ~(a.bits() & comp[i]));
  }
  return value;
}

DerivedContractedBound LowerBoundContractedDerived(std::span<const Matroid> matroids,
                                                   const CoveringBases& ts) {
  const int n = CheckedGround(matroids, kMaxSubsetScanGround, "contracted bound");
  RequireBases(matroids, ts);
  const std::vector<RankTable> tables = RankTables(matroids);
  const std::vector<Mask> comp = Complements(ts, n);
  const int total = SumFullRanks(tables);
  const Mask full = FullMask(n);
  kernels::Best best = kernels::ArgMax(std::int64_t{1} << n, [&](std::int64_t i) {
    auto a = static_cast<Mask>(i);
    return std::int64_t{Popcount(a) - SumOverlaps(comp, a) + total -
                        SumRanksOutside(tables, comp, a, full)};
  });
  DerivedContractedBound out;
  out.value = static_cast<int>(best.value);
  out.argmax = Subset(n, static_cast<Mask>(best.index));
  out.oracle_value = n - ContractedUnion(matroids, ts, n).rank();
  if (out.oracle_value != out.value) {
    throw std::logic_error("contracted bound expansion " + std::to_string(out.value) +
                           " disagrees with union oracle " +
                           std::to_string(out.oracle_value));
  }
  return out;
}

ContainmentReport CheckDualContainment(std::span<const Matroid> matroids) {
  CheckedGround(matroids, kMaxContainmentGround, "dual containment check");
  return CompareFamilies(DualOfIntersection(matroids), UnionOfDualsFamily(matroids));
}

ContainmentReport CheckContractedContainment(std::span<const Matroid> matroids,
                                             const CoveringBases& ts) {
  const int n = CheckedGround(matroids, kMaxContainmentGround, "contracted containment check");
  RequireBases(matroids, ts);
  return CompareFamilies(DualOfIntersection(matroids),
                         ContractedUnion(matroids, ts, n).IndependentSets());
}

DualEqualityReport CheckDualEqualityTwo(const Matroid& m1, const Matroid& m2) {
  const Matroid pair[] = {m1, m2};
  CheckedGround(pair, kMaxContainmentGround, "dual equality check");
  DualEqualityReport report;
  report.intersection_is_matroid = IsMatroid(Intersect(pair)).is_matroid;
  const Family lhs = DualOfIntersection(pair);
  const Family rhs = UnionOfDualsFamily(pair);
  report.equal = lhs == rhs;
  if (!report.equal) {
    auto left_only = lhs.MinimalDifference(rhs);
    auto right_only = rhs.MinimalDifference(lhs);
    report.witness = left_only ? left_only : right_only;
    if (left_only && right_only && right_only->size() < left_only->size()) {
      report.witness = right_only;
    }
  }
  return report;
}

std::vector<Counterexample> CounterexampleSearch(const CounterexampleConfig& config,
                                                 std::uint64_t seed) {
  if (config.families.empty()) throw std::invalid_argument("no generator families");
  if (config.n_min < 0 || config.n_max > 8 || config.n_min > config.n_max) {
    throw std::invalid_argument("counterexample search needs 0 <= n_min <= n_max <= 8");
  }
  if (config.m_min < 1 || config.m_max > 3 || config.m_min > config.m_max) {
    throw std::invalid_argument("counterexample search needs 1 <= m_min <= m_max <= 3");
  }
  std::mt19937_64 rng(seed);
  std::vector<Counterexample> found;
  for (int trial = 0; trial < config.count; ++trial) {
    GeneratorFamily family =
        config.families[UniformInt(rng, 0, static_cast<int>(config.families.size()) - 1)];
    int n = UniformInt(rng, config.n_min, config.n_max);
    int m = UniformInt(rng, config.m_min, config.m_max);
    std::mt19937_64 local(rng());
    InstanceSpec instance;
    if (config.identical) {
      Matroid one = RandomMatroid(family, n, local);
      instance.matroids.assign(m, one);
    } else {
      for (int i = 0; i < m; ++i) instance.matroids.push_back(RandomMatroid(family, n, local));
    }
    ContainmentReport report = CheckDualContainment(instance.matroids);
    if (!report.strict_witness && report.holds) continue;
    Counterexample cx;
    cx.id = "cx-" + std::to_string(seed) + "-" + std::to_string(trial);
    cx.witness = report.strict_witness ? *report.strict_witness : *report.violation;
    cx.intersection_is_matroid = IsMatroid(Intersect(instance.matroids)).is_matroid;
    cx.instance = std::move(instance);
    found.push_back(std::move(cx));
  }
  return found;
}

bool BoundReport::HasFlag(const std::string& flag) const {
  return std::find(violation_flags.begin(), violation_flags.end(), flag) !=
         violation_flags.end();
}

BoundReport AuditInstance(const InstanceSpec& instance, const AuditOptions& options,
                          std::string instance_id) {
  const std::span<const Matroid> ms = instance.matroids;
  if (ms.empty()) throw std::invalid_argument("audit of an instance with no matroids");
  BoundReport r;
  r.instance_id = std::move(instance_id);
  r.n = CommonGroundSize(ms);
  r.m = static_cast<int>(ms.size());
  const int n = r.n;
  auto flag = [&](const char* name) { r.violation_flags.emplace_back(name); };

  if (n <= kMaxBruteForceGround) {
    r.optimum = MaxCommonIndependentBruteForce(ms).size;
  } else {
    r.skipped.emplace_back("optimum");
  }
  if (r.m == 2) {
    if (n <= kMaxBruteForceGround) {
      r.edmonds_rhs = EdmondsMinMaxRhs(ms[0], ms[1]).value;
    } else {
      r.skipped.emplace_back("edmonds_rhs");
    }
  }
  bool levels_ok = true;
  try {
    LevelAssignmentCount(r.m, n);
  } catch (const std::invalid_argument&) {
    levels_ok = false;
  }
  if (levels_ok) {
    r.upper_partition = UpperBoundPartition(ms).value;
    if (r.m >= 2) r.filtration_rhs = FiltrationMinMaxRhs(ms).value;
  } else {
    r.skipped.emplace_back("upper_partition");
    if (r.m >= 2) r.skipped.emplace_back("filtration_rhs");
  }
  if (n <= kMaxSubsetScanGround) {
    DualUnionBound lb = LowerBoundDualUnion(ms);
    r.lower_dual_union_raw = lb.raw;
    r.lower_dual_union_clamped = lb.clamped;
  } else {
    r.skipped.emplace_back("lower_dual_union");
  }

  std::optional<CoveringBases> covering;
  if (instance.covering_bases) {
    if (AreBases(ms, *instance.covering_bases) &&
        IsCoveringCocovering(*instance.covering_bases, n)) {
      covering = CoveringBases{*instance.covering_bases};
    } else {
      flag("declared_covering_bases_invalid");
    }
  }
  if (!covering && n <= kMaxSubsetScanGround) {
    CoveringSearch search = FindCoveringCocoveringBases(ms, options.covering_seed);
    r.covering_search_exhaustive = search.exhaustive;
    covering = search.bases;
  }
  r.covering_found = covering.has_value();
  if (covering) {
    r.lower_contracted_printed = LowerBoundContractedPrinted(ms, *covering).value;
    r.lower_contracted_derived = LowerBoundContractedDerived(ms, *covering).value;
  }

  if (n <= kMaxContainmentGround) {
    ContainmentReport dual = CheckDualContainment(ms);
    r.dual_containment_strict = dual.strict;
    if (!dual.holds) flag("lemma32_containment_violated");
    if (covering) {
      ContainmentReport contracted = CheckContractedContainment(ms, *covering);
      r.contracted_containment_strict = contracted.strict;
      if (!contracted.holds) flag("prop31_containment_violated");
    }
    if (r.m == 2) r.dual_equality_two = CheckDualEqualityTwo(ms[0], ms[1]).equal;
  } else {
    r.skipped.emplace_back("containment");
  }
  if (n <= kMaxIsMatroidGround) {
    r.is_matroid_intersection = IsMatroid(Intersect(ms)).is_matroid;
    r.prefix_intersections_matroids = PrefixIntersectionsAreMatroids(ms);
  } else {
    r.skipped.emplace_back("is_matroid_intersection");
  }
  if (instance.chain) r.declared_chain_value = FiltrationValue(ms, *instance.chain);

  if (options.dual_rank_table) {
    if (n <= kMaxContainmentGround) {
      for (Mask x = 0;; ++x) {
        Subset xs(n, x);
        r.dual_rank_upper.push_back({xs, DualRankUpperBound(ms, xs)});
        if (!r.dual_rank_upper.back().bound.subsets_of_x_dominates()) {
          flag("prop12_dual_rank_subsets_of_x_violated");
        }
        if (!r.dual_rank_upper.back().bound.all_subsets_dominates()) {
          flag("prop12_dual_rank_all_subsets_violated");
        }
        if (x == FullMask(n)) break;
      }
      // One flag per kind is enough.
      std::sort(r.violation_flags.begin(), r.violation_flags.end());
      r.violation_flags.erase(std::unique(r.violation_flags.begin(), r.violation_flags.end()),
                              r.violation_flags.end());
    } else {
      r.skipped.emplace_back("dual_rank_upper");
    }
  }

  if (r.optimum) {
    const int opt = *r.optimum;
    if (r.upper_partition && *r.upper_partition < opt) flag("cor11_upper_below_optimum");
    if (r.lower_dual_union_raw && *r.lower_dual_union_raw > opt) {
      flag("prop12_lower_exceeds_optimum");
    }
    if (r.lower_contracted_printed && *r.lower_contracted_printed > opt) {
      flag("thm13_printed_exceeds_optimum");
    }
    if (r.lower_contracted_derived && *r.lower_contracted_derived > opt) {
      flag("thm13_derived_exceeds_optimum");
    }
    if (r.edmonds_rhs && *r.edmonds_rhs != opt) flag("edmonds_mismatch");
    if (r.filtration_rhs && *r.filtration_rhs < opt) flag("filtration_below_optimum");
    if (r.filtration_rhs && r.prefix_intersections_matroids.value_or(false) &&
        *r.filtration_rhs != opt) {
      flag("prop11_equality_fails");
    }
    if (r.declared_chain_value && *r.declared_chain_value < opt) {
      flag("declared_chain_below_optimum");
    }
  }
  return r;
}

}  // namespace matroid
