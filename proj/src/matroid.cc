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

#include "matroid/matroid.h"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <variant>

#include "matroid/axioms.h"

namespace matroid {

namespace {

constexpr int kMaxPrime = 97;
constexpr int kMaxExplicitGround = 20;

bool IsPrime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int PowMod(int base, int exp, int p) {
  int result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

using SpecVariant = std::variant<UniformSpec, GraphicSpec, LinearSpec,
                                 PartitionSpec, ExplicitSpec, DerivedSpec>;

struct Matroid::Node {
  int n = 0;
  SpecVariant spec;

  // Graphic: endpoints relabelled to 0..compact_vertices-1.
  std::vector<std::pair<int, int>> compact_edges;
  int compact_vertices = 0;
  // Partition: block index of each element.
  std::vector<int> block_of;
  // Dual: operand rank of E. Contract: operand rank of X.
  int operand_rank = 0;
  // Loop extension: universe elements that are images of operand elements.
  Mask image = 0;
};

namespace {

int GraphicRank(const Matroid::Node& node, Mask bits) {
  std::array<int, 2 * kMaxGroundSize> parent;
  for (int v = 0; v < node.compact_vertices; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int rank = 0;
  for (; bits != 0; bits &= bits - 1) {
    auto [u, v] = node.compact_edges[std::countr_zero(bits)];
    int ru = find(u);
    int rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      ++rank;
    }
  }
  return rank;
}

// Gaussian elimination over GF(p), one column at a time. Each stored row is
// scaled to 1 at its pivot and already reduced against earlier rows.
int LinearRank(const LinearSpec& spec, Mask bits) {
  const int p = spec.prime;
  std::vector<std::vector<int>> reduced;
  std::vector<int> pivots;
  for (; bits != 0; bits &= bits - 1) {
    std::vector<int> v = spec.columns[std::countr_zero(bits)];
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      int c = v[pivots[k]];
      if (c == 0) continue;
      for (int j = 0; j < spec.dimension; ++j) {
        v[j] = ((v[j] - c * reduced[k][j]) % p + p) % p;
      }
    }
    auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (lead == v.end()) continue;
    int inv = PowMod(*lead, p - 2, p);
    for (int& x : v) x = x * inv % p;
    pivots.push_back(static_cast<int>(lead - v.begin()));
    reduced.push_back(std::move(v));
  }
  return static_cast<int>(reduced.size());
}

int PartitionRank(const Matroid::Node& node, const PartitionSpec& spec, Mask bits) {
  std::array<int, kMaxGroundSize> counts{};
  for (; bits != 0; bits &= bits - 1) ++counts[node.block_of[std::countr_zero(bits)]];
  int rank = 0;
  for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
    rank += std::min(counts[b], spec.capacities[b]);
  }
  return rank;
}

bool PartitionIndependent(const Matroid::Node& node, const PartitionSpec& spec,
                          Mask bits) {
  std::array<int, kMaxGroundSize> counts{};
  for (; bits != 0; bits &= bits - 1) {
    int b = node.block_of[std::countr_zero(bits)];
    if (++counts[b] > spec.capacities[b]) return false;
  }
  return true;
}

int GreedyRank(Mask bits, auto&& independent) {
  Mask chosen = 0;
  for (; bits != 0; bits &= bits - 1) {
    Mask candidate = chosen | (bits & -bits);
    if (independent(candidate)) chosen = candidate;
  }
  return Popcount(chosen);
}

int UnionRank(const DerivedSpec& spec, Mask x) {
  // min over A subset of X of |X \ A| + sum_i r_i(A)
  int best = std::numeric_limits<int>::max();
  for (Mask a = x;; a = (a - 1) & x) {
    int value = Popcount(x & ~a);
    for (const Matroid& m : spec.operands) {
      if (value >= best) break;
      value += m.RankBits(a);
    }
    best = std::min(best, value);
    if (a == 0) break;
  }
  return best;
}

int DerivedRank(const Matroid::Node& node, const DerivedSpec& spec, Mask bits) {
  const Matroid& op = spec.operands.front();
  switch (spec.op) {
    case DerivedOp::kDual: {
      Mask rest = FullMask(op.size()) & ~bits;
      return Popcount(bits) + op.RankBits(rest) - node.operand_rank;
    }
    case DerivedOp::kDelete:
    case DerivedOp::kRestrict:
      return op.RankBits(ExpandMask(bits, spec.positions));
    case DerivedOp::kContract:
      return op.RankBits(ExpandMask(bits, spec.positions) | spec.subset.bits()) -
             node.operand_rank;
    case DerivedOp::kUnion:
      return UnionRank(spec, bits);
    case DerivedOp::kLoopExtend:
      return op.RankBits(CompressMask(bits, spec.positions));
  }
  return 0;
}

bool DerivedIndependent(const Matroid::Node& node, const DerivedSpec& spec,
                        Mask bits) {
  const Matroid& op = spec.operands.front();
  switch (spec.op) {
    case DerivedOp::kDual:
      return op.RankBits(FullMask(op.size()) & ~bits) == node.operand_rank;
    case DerivedOp::kDelete:
    case DerivedOp::kRestrict:
      return op.IsIndependentBits(ExpandMask(bits, spec.positions));
    case DerivedOp::kLoopExtend:
      return (bits & ~node.image) == 0 &&
             op.IsIndependentBits(CompressMask(bits, spec.positions));
    case DerivedOp::kContract:
    case DerivedOp::kUnion:
      return DerivedRank(node, spec, bits) == Popcount(bits);
  }
  return false;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

Matroid Matroid::Uniform(int n, int k) {
  CheckGroundSize(n);
  if (k < 0 || k > n) {
    throw std::invalid_argument("uniform matroid needs 0 <= k <= n");
  }
  auto node = std::make_shared<Node>();
  node->n = n;
  node->spec = UniformSpec{n, k};
  return Matroid(std::move(node));
}

Matroid Matroid::Graphic(int vertices, std::vector<std::pair<int, int>> edges) {
  CheckGroundSize(static_cast<int>(edges.size()));
  if (vertices < 0) throw std::invalid_argument("vertex count must be >= 0");
  auto node = std::make_shared<Node>();
  node->n = static_cast<int>(edges.size());
  std::map<int, int> relabel;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw std::invalid_argument("edge endpoint outside vertex range");
    }
    relabel.emplace(u, 0);
    relabel.emplace(v, 0);
  }
  int next = 0;
  for (auto& [vertex, id] : relabel) id = next++;
  node->compact_vertices = next;
  for (auto [u, v] : edges) node->compact_edges.emplace_back(relabel[u], relabel[v]);
  node->spec = GraphicSpec{vertices, std::move(edges)};
  return Matroid(std::move(node));
}

Matroid Matroid::Linear(int prime, std::vector<std::vector<int>> columns) {
  if (!IsPrime(prime) || prime > kMaxPrime) {
    throw std::invalid_argument("linear matroid needs a prime <= 97, got " +
                                std::to_string(prime));
  }
  CheckGroundSize(static_cast<int>(columns.size()));
  int dimension = columns.empty() ? 0 : static_cast<int>(columns.front().size());
  for (auto& col : columns) {
    if (static_cast<int>(col.size()) != dimension) {
      throw std::invalid_argument("linear matroid columns differ in length");
    }
    for (int& x : col) x = ((x % prime) + prime) % prime;
  }
  auto node = std::make_shared<Node>();
  node->n = static_cast<int>(columns.size());
  node->spec = LinearSpec{prime, dimension, std::move(columns)};
  return Matroid(std::move(node));
}

Matroid Matroid::Partition(std::vector<std::vector<int>> blocks,
                           std::vector<int> capacities) {
  if (blocks.size() != capacities.size()) {
    throw std::invalid_argument("partition matroid needs one capacity per block");
  }
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  CheckGroundSize(n);
  auto node = std::make_shared<Node>();
  node->n = n;
  node->block_of.assign(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (capacities[b] < 0) throw std::invalid_argument("negative block capacity");
    for (int e : blocks[b]) {
      if (e < 0 || e >= n || node->block_of[e] != -1) {
        throw std::invalid_argument("partition blocks do not partition 0..n-1");
      }
      node->block_of[e] = static_cast<int>(b);
    }
  }
  node->spec = PartitionSpec{std::move(blocks), std::move(capacities)};
  return Matroid(std::move(node));
}

Matroid Matroid::Explicit(const Family& family) {
  if (family.ground_size() > kMaxExplicitGround) {
    throw std::invalid_argument("explicit families are limited to n <= 20");
  }
  AxiomReport report = CheckMatroidAxioms(family);
  if (!report.ok()) throw AxiomError(report.ToString());
  auto node = std::make_shared<Node>();
  node->n = family.ground_size();
  node->spec = ExplicitSpec{family};
  return Matroid(std::move(node));
}

Matroid Matroid::Explicit(int n, std::span<const Subset> independent) {
  if (n > kMaxExplicitGround) {
    throw std::invalid_argument("explicit families are limited to n <= 20");
  }
  return Explicit(Family::FromSets(n, independent));
}

Matroid Matroid::FromDerived(DerivedSpec spec) {
  if (spec.operands.empty()) throw std::invalid_argument("derived matroid needs operands");
  CheckGroundSize(spec.n);
  auto node = std::make_shared<Node>();
  node->n = spec.n;
  const Matroid& op = spec.operands.front();
  switch (spec.op) {
    case DerivedOp::kDual:
      node->operand_rank = op.rank();
      break;
    case DerivedOp::kContract:
      node->operand_rank = op.RankBits(spec.subset.bits());
      break;
    case DerivedOp::kLoopExtend:
      for (int pos : spec.positions) node->image |= Mask{1} << pos;
      break;
    default:
      break;
  }
  node->spec = std::move(spec);
  return Matroid(std::move(node));
}

int Matroid::size() const { return node_->n; }

Matroid::Kind Matroid::kind() const {
  return static_cast<Kind>(node_->spec.index());
}

void Matroid::CheckGround(const Subset& s) const {
  if (s.ground_size() != node_->n) {
    throw std::invalid_argument("ground-set mismatch: subset over " +
                                std::to_string(s.ground_size()) +
                                " elements, matroid over " +
                                std::to_string(node_->n));
  }
}

bool Matroid::is_independent(const Subset& s) const {
  CheckGround(s);
  return IsIndependentBits(s.bits());
}

int Matroid::rank(const Subset& s) const {
  CheckGround(s);
  return RankBits(s.bits());
}

int Matroid::rank() const { return RankBits(FullMask(node_->n)); }

bool Matroid::IsIndependentBits(Mask bits) const {
  const Node& node = *node_;
  return std::visit(
      Overloaded{
          [&](const UniformSpec& s) { return Popcount(bits) <= s.k; },
          [&](const GraphicSpec&) { return GraphicRank(node, bits) == Popcount(bits); },
          [&](const LinearSpec& s) { return LinearRank(s, bits) == Popcount(bits); },
          [&](const PartitionSpec& s) { return PartitionIndependent(node, s, bits); },
          [&](const ExplicitSpec& s) { return s.family.contains(bits); },
          [&](const DerivedSpec& s) { return DerivedIndependent(node, s, bits); },
      },
      node.spec);
}

int Matroid::RankBits(Mask bits) const {
  const Node& node = *node_;
  return std::visit(
      Overloaded{
          [&](const UniformSpec& s) { return std::min(Popcount(bits), s.k); },
          [&](const GraphicSpec&) { return GraphicRank(node, bits); },
          [&](const LinearSpec& s) { return LinearRank(s, bits); },
          [&](const PartitionSpec& s) { return PartitionRank(node, s, bits); },
          [&](const ExplicitSpec& s) {
            return GreedyRank(bits,
                              [&](Mask m) { return s.family.contains(m); });
          },
          [&](const DerivedSpec& s) { return DerivedRank(node, s, bits); },
      },
      node.spec);
}

int Matroid::GreedyRankBits(Mask bits) const {
  return GreedyRank(bits, [&](Mask m) { return IsIndependentBits(m); });
}

Family Matroid::IndependentSets() const {
  return Family::FromPredicate(node_->n, [&](Mask m) { return IsIndependentBits(m); });
}

const UniformSpec* Matroid::uniform() const { return std::get_if<UniformSpec>(&node_->spec); }
const GraphicSpec* Matroid::graphic() const { return std::get_if<GraphicSpec>(&node_->spec); }
const LinearSpec* Matroid::linear() const { return std::get_if<LinearSpec>(&node_->spec); }
const PartitionSpec* Matroid::partition() const {
  return std::get_if<PartitionSpec>(&node_->spec);
}
const ExplicitSpec* Matroid::explicit_family() const {
  return std::get_if<ExplicitSpec>(&node_->spec);
}
const DerivedSpec* Matroid::derived() const { return std::get_if<DerivedSpec>(&node_->spec); }

std::string Matroid::Describe() const {
  const Node& node = *node_;
  return std::visit(
      Overloaded{
          [&](const UniformSpec& s) {
            return "uniform(" + std::to_string(s.n) + "," + std::to_string(s.k) + ")";
          },
          [&](const GraphicSpec& s) {
            return "graphic(v=" + std::to_string(s.vertices) +
                   ",e=" + std::to_string(s.edges.size()) + ")";
          },
          [&](const LinearSpec& s) {
            return "linear(p=" + std::to_string(s.prime) + ",d=" +
                   std::to_string(s.dimension) + ",n=" + std::to_string(node.n) + ")";
          },
          [&](const PartitionSpec& s) {
            std::string out = "partition(";
            for (std::size_t b = 0; b < s.blocks.size(); ++b) {
              if (b) out += ",";
              out += Subset::FromIndices(node.n, s.blocks[b]).ToString() + ":" +
                     std::to_string(s.capacities[b]);
            }
            return out + ")";
          },
          [&](const ExplicitSpec& s) {
            return "explicit(n=" + std::to_string(node.n) +
                   ",|F|=" + std::to_string(s.family.count()) + ")";
          },
          [&](const DerivedSpec& s) {
            static constexpr const char* kNames[] = {"dual", "delete", "contract",
                                                     "restrict", "union", "loop_extend"};
            std::string out = std::string(kNames[static_cast<int>(s.op)]) + "(";
            for (std::size_t i = 0; i < s.operands.size(); ++i) {
              if (i) out += ",";
              out += s.operands[i].Describe();
            }
            if (s.op == DerivedOp::kDelete || s.op == DerivedOp::kContract ||
                s.op == DerivedOp::kRestrict) {
              out += "," + s.subset.ToString();
            }
            return out + ")";
          },
      },
      node.spec);
}

int CommonGroundSize(std::span<const Matroid> matroids) {
  if (matroids.empty()) return 0;
  int n = matroids.front().size();
  for (const Matroid& m : matroids) {
    if (m.size() != n) {
      throw std::invalid_argument("ground-set mismatch between matroids: " +
                                  std::to_string(n) + " vs " + std::to_string(m.size()));
    }
  }
  return n;
}

Subset BasisOf(const Matroid& m, const Subset& within) {
  return ExtendToBasis(m, Subset::Empty(m.size()), within);
}

Subset BasisOf(const Matroid& m) { return BasisOf(m, Subset::Full(m.size())); }

Subset ExtendToBasis(const Matroid& m, const Subset& start, const Subset& within) {
  if (start.ground_size() != m.size() || within.ground_size() != m.size()) {
    throw std::invalid_argument("ground-set mismatch");
  }
  if (!start.is_subset_of(within)) {
    throw std::invalid_argument("start set " + start.ToString() + " is not inside " +
                                within.ToString());
  }
  if (!m.IsIndependentBits(start.bits())) {
    throw std::invalid_argument("start set " + start.ToString() + " is not independent");
  }
  Mask chosen = start.bits();
  for (Mask rest = within.bits() & ~chosen; rest != 0; rest &= rest - 1) {
    Mask candidate = chosen | (rest & -rest);
    if (m.IsIndependentBits(candidate)) chosen = candidate;
  }
  return Subset(m.size(), chosen);
}

}  // namespace matroid
