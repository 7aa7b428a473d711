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

#ifndef MATROID_MATROID_H_
#define MATROID_MATROID_H_

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matroid/family.h"
#include "matroid/subset.h"

namespace matroid {

struct UniformSpec;
struct GraphicSpec;
struct LinearSpec;
struct PartitionSpec;
struct ExplicitSpec;
struct DerivedSpec;

// Raised when an explicit family fails M1, M2 or M3.
class AxiomError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An immutable matroid on the ground set {0..size()-1} with an independence
// oracle and a rank oracle. Copies share the underlying construction.
//
// Elements map positionally onto the construction: edge i of a graph,
// column i of a matrix, and so on.
class Matroid {
 public:
  enum class Kind { kUniform, kGraphic, kLinear, kPartition, kExplicit, kDerived };

  static Matroid Uniform(int n, int k);
  static Matroid Free(int n) { return Uniform(n, n); }
  static Matroid Zero(int n) { return Uniform(n, 0); }
  static Matroid Graphic(int vertices, std::vector<std::pair<int, int>> edges);
  // Columns are reduced mod `prime`; prime must be a prime <= 97.
  static Matroid Linear(int prime, std::vector<std::vector<int>> columns);
  // Blocks must partition {0..n-1} where n is the total block size.
  static Matroid Partition(std::vector<std::vector<int>> blocks,
                           std::vector<int> capacities);
  // Throws AxiomError unless the family satisfies M1, M2 and M3.
  static Matroid Explicit(const Family& family);
  static Matroid Explicit(int n, std::span<const Subset> independent);
  // Used by the ops module; the spec is validated there.
  static Matroid FromDerived(DerivedSpec spec);

  int size() const;
  Kind kind() const;

  bool is_independent(const Subset& s) const;
  int rank(const Subset& s) const;
  int rank() const;

  // Unchecked: `bits` must lie within FullMask(size()).
  bool IsIndependentBits(Mask bits) const;
  int RankBits(Mask bits) const;
  // Rank computed by greedy augmentation through the independence oracle
  // only; agrees with RankBits on every matroid.
  int GreedyRankBits(Mask bits) const;

  Family IndependentSets() const;

  const UniformSpec* uniform() const;
  const GraphicSpec* graphic() const;
  const LinearSpec* linear() const;
  const PartitionSpec* partition() const;
  const ExplicitSpec* explicit_family() const;
  const DerivedSpec* derived() const;

  // Short human-readable construction tree, e.g. "dual(uniform(3,2))".
  std::string Describe() const;

  struct Node;

 private:
  explicit Matroid(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  void CheckGround(const Subset& s) const;

  std::shared_ptr<const Node> node_;
};

struct UniformSpec {
  int n;
  int k;
};

struct GraphicSpec {
  int vertices;
  std::vector<std::pair<int, int>> edges;
};

struct LinearSpec {
  int prime;
  int dimension;
  std::vector<std::vector<int>> columns;  // entries in [0, prime)
};

struct PartitionSpec {
  std::vector<std::vector<int>> blocks;
  std::vector<int> capacities;
};

struct ExplicitSpec {
  Family family;
};

enum class DerivedOp { kDual, kDelete, kContract, kRestrict, kUnion, kLoopExtend };

struct DerivedSpec {
  DerivedOp op;
  std::vector<Matroid> operands;
  // kDelete / kContract: the removed set X. kRestrict: the kept set C.
  // Unused otherwise.
  Subset subset;
  // kDelete / kContract / kRestrict: operand positions of the kept elements,
  // ascending. kLoopExtend: universe position of each operand element.
  std::vector<int> positions;
  // Ground-set size of the result.
  int n = 0;
};

// Throws std::invalid_argument unless all matroids share one ground set.
// Returns that size (0 for an empty list).
int CommonGroundSize(std::span<const Matroid> matroids);

// Independent subset of `within` built by scanning ascending indices and
// keeping each element whose addition stays independent.
Subset BasisOf(const Matroid& m, const Subset& within);
Subset BasisOf(const Matroid& m);

// Greedy ascending augmentation of an independent `start` inside `within`.
Subset ExtendToBasis(const Matroid& m, const Subset& start, const Subset& within);

}  // namespace matroid

#endif  // MATROID_MATROID_H_
