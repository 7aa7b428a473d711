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

#ifndef MATROID_INSTANCE_H_
#define MATROID_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "matroid/intersection.h"
#include "matroid/matroid.h"
#include "matroid/subset.h"

namespace matroid {

// Several matroids on one ground set, plus optional declared structure.
struct InstanceSpec {
  std::vector<Matroid> matroids;
  std::optional<std::vector<Subset>> covering_bases;
  std::optional<Chain> chain;

  int ground_size() const { return matroids.empty() ? 0 : matroids.front().size(); }
};

enum class GeneratorFamily { kUniform, kGraphic, kLinear, kPartition, kMixed };

GeneratorFamily ParseGeneratorFamily(std::string_view name);
std::string_view GeneratorFamilyName(GeneratorFamily family);

// Deterministic in (family, n, m, seed). Graphic draws multigraphs (loops
// and parallel edges allowed) on 1..n+1 vertices; linear draws GF(2)
// columns of dimension 1..4; partition draws block labels and capacities.
InstanceSpec GenerateRandom(GeneratorFamily family, int n, int m, std::uint64_t seed);

// One random matroid of the given family (kMixed picks one of the others).
Matroid RandomMatroid(GeneratorFamily family, int n, std::mt19937_64& rng);

// Uniform integer in [lo, hi] from raw engine output, identical on every
// standard library.
int UniformInt(std::mt19937_64& rng, int lo, int hi);

}  // namespace matroid

#endif  // MATROID_INSTANCE_H_
