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

// Bounds on the largest common independent set of m matroids, the
// containment relations behind them, and an audit that checks all of them
// against brute force.
//
// Notation: r_i is the rank of M_i, E the ground set, T_i^c = E \ T_i.

#ifndef MATROID_BOUNDS_H_
#define MATROID_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matroid/instance.h"
#include "matroid/matroid.h"
#include "matroid/subset.h"

namespace matroid {

inline constexpr int kMaxSubsetScanGround = 20;
// Materializing the union of duals costs 3^n rank evaluations per matroid.
inline constexpr int kMaxContainmentGround = 12;
inline constexpr std::int64_t kMaxBasisProduct = 1'000'000;

struct PartitionBound {
  int value = 0;
  std::vector<Subset> parts;  // ordered partition X_1..X_m of E
};

// min over ordered partitions E = X_1 u ... u X_m of sum_i r_i(X_i).
PartitionBound UpperBoundPartition(std::span<const Matroid> matroids);

struct DualUnionBound {
  int raw = 0;      // may be negative
  int clamped = 0;  // max(raw, 0)
  Subset argmax;
};

// max over A of sum_i r_i(E) - sum_i r_i(E \ A) - (m-1)|A|.
DualUnionBound LowerBoundDualUnion(std::span<const Matroid> matroids);
int DualUnionTerm(std::span<const Matroid> matroids, const Subset& a);

struct DualRankBound {
  int dual_rank = 0;          // rank of X in the dual of the intersection
  int min_over_subsets_of_x = 0;
  int min_over_all_subsets = 0;
  bool subsets_of_x_dominates() const { return min_over_subsets_of_x >= dual_rank; }
  bool all_subsets_dominates() const { return min_over_all_subsets >= dual_rank; }
};

// |X| + (m-1)|A| + sum_i r_i(E \ A) - sum_i r_i(E), minimized over A
// subset of X and over A subset of E, next to the enumerated dual rank.
DualRankBound DualRankUpperBound(std::span<const Matroid> matroids, const Subset& x);
int DualRankBoundTerm(std::span<const Matroid> matroids, const Subset& x, const Subset& a);

struct CoveringBases {
  std::vector<Subset> ts;
};

bool AreBases(std::span<const Matroid> matroids, std::span<const Subset> ts);
// Union of the T_i is E and union of the complements is E.
bool IsCoveringCocovering(std::span<const Subset> ts, int n);

struct CoveringSearch {
  std::optional<CoveringBases> bases;
  // True when every combination of bases was examined, so an empty result
  // means none exists.
  bool exhaustive = false;
};

// Exhaustive over the product of basis lists (T_1 varying slowest) when the
// product is at most kMaxBasisProduct; otherwise seeded greedy restarts.
CoveringSearch FindCoveringCocoveringBases(std::span<const Matroid> matroids,
                                           std::uint64_t seed = 0, int restarts = 2000);

struct ContractedBound {
  int value = 0;
  Subset argmax;
};

// max over A of 2 sum_i r_i(E) - (m-1)|A| - sum_i r_i(E \ (A n T_i^c)),
// evaluated as written. Not a valid lower bound in general.
ContractedBound LowerBoundContractedPrinted(std::span<const Matroid> matroids,
                                            const CoveringBases& ts);
int PrintedContractedTerm(std::span<const Matroid> matroids, const CoveringBases& ts,
                          const Subset& a);

struct DerivedContractedBound {
  int value = 0;
  Subset argmax;
  // |E| - r_N(E), N the union of the loop-extended (M_i / T_i)*.
  int oracle_value = 0;
};

// max over A of |A| - sum_i |A n T_i^c| + sum_i r_i(E) - sum_i r_i(E \ (A n T_i^c)),
// cross-checked against the matroid-union oracle; throws std::logic_error
// if the two disagree. Each T_i must be a basis of M_i.
DerivedContractedBound LowerBoundContractedDerived(std::span<const Matroid> matroids,
                                                   const CoveringBases& ts);
int DerivedContractedTerm(std::span<const Matroid> matroids, const CoveringBases& ts,
                          const Subset& a);

struct ContainmentReport {
  bool holds = true;
  std::optional<Subset> violation;  // smallest set on the left only
  bool strict = false;
  std::optional<Subset> strict_witness;  // smallest set on the right only
};

// Dual of the intersection versus the union of the duals.
ContainmentReport CheckDualContainment(std::span<const Matroid> matroids);

// Dual of the intersection versus the general union of (M_i / T_i)*.
ContainmentReport CheckContractedContainment(std::span<const Matroid> matroids,
                                             const CoveringBases& ts);

struct DualEqualityReport {
  bool intersection_is_matroid = false;
  bool equal = false;
  std::optional<Subset> witness;  // smallest set in exactly one family
  // The intersection is a matroid but the families differ.
  bool contradicts_claim() const { return intersection_is_matroid && !equal; }
};

DualEqualityReport CheckDualEqualityTwo(const Matroid& m1, const Matroid& m2);

struct CounterexampleConfig {
  std::vector<GeneratorFamily> families = {GeneratorFamily::kMixed};
  int n_min = 2;
  int n_max = 6;
  int m_min = 2;
  int m_max = 3;
  int count = 200;  // instances generated
  // Use one random matroid m times.
  bool identical = false;
};

struct Counterexample {
  std::string id;
  InstanceSpec instance;
  Subset witness;  // smallest set in the union of duals only
  bool intersection_is_matroid = false;
};

// Every generated instance whose dual of the intersection differs from the
// union of the duals. Deterministic in (config, seed).
std::vector<Counterexample> CounterexampleSearch(const CounterexampleConfig& config,
                                                 std::uint64_t seed);

struct AuditOptions {
  bool dual_rank_table = false;
  std::uint64_t covering_seed = 0;
};

struct DualRankRow {
  Subset x;
  DualRankBound bound;
};

struct BoundReport {
  std::string instance_id;
  int n = 0;
  int m = 0;
  std::optional<int> optimum;
  std::optional<int> edmonds_rhs;
  std::optional<int> filtration_rhs;
  std::optional<int> upper_partition;
  std::optional<int> lower_dual_union_raw;
  std::optional<int> lower_dual_union_clamped;
  std::optional<int> lower_contracted_printed;
  std::optional<int> lower_contracted_derived;
  bool covering_found = false;
  std::optional<bool> covering_search_exhaustive;
  std::optional<bool> dual_containment_strict;
  std::optional<bool> contracted_containment_strict;
  std::optional<bool> dual_equality_two;
  std::optional<bool> is_matroid_intersection;
  std::optional<bool> prefix_intersections_matroids;
  std::optional<int> declared_chain_value;
  std::vector<DualRankRow> dual_rank_upper;
  std::vector<std::string> violation_flags;
  // Sub-checks not run because the instance exceeds their caps.
  std::vector<std::string> skipped;

  bool HasFlag(const std::string& flag) const;
};

BoundReport AuditInstance(const InstanceSpec& instance, const AuditOptions& options,
                          std::string instance_id);

}  // namespace matroid

#endif  // MATROID_BOUNDS_H_
