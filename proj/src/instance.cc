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

#include "matroid/instance.h"

#include <stdexcept>

namespace matroid {

GeneratorFamily ParseGeneratorFamily(std::string_view name) {
  if (name == "uniform") return GeneratorFamily::kUniform;
  if (name == "graphic") return GeneratorFamily::kGraphic;
  if (name == "linear") return GeneratorFamily::kLinear;
  if (name == "partition") return GeneratorFamily::kPartition;
  if (name == "mixed") return GeneratorFamily::kMixed;
  throw std::invalid_argument("unknown generator family '" + std::string(name) + "'");
}

std::string_view GeneratorFamilyName(GeneratorFamily family) {
  switch (family) {
    case GeneratorFamily::kUniform: return "uniform";
    case GeneratorFamily::kGraphic: return "graphic";
    case GeneratorFamily::kLinear: return "linear";
    case GeneratorFamily::kPartition: return "partition";
    case GeneratorFamily::kMixed: return "mixed";
  }
  return "";
}

int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

Matroid RandomMatroid(GeneratorFamily family, int n, std::mt19937_64& rng) {
  CheckGroundSize(n);
  if (family == GeneratorFamily::kMixed) {
    family = static_cast<GeneratorFamily>(UniformInt(rng, 0, 3));
  }
  switch (family) {
    case GeneratorFamily::kUniform:
      return Matroid::Uniform(n, UniformInt(rng, 0, n));
    case GeneratorFamily::kGraphic: {
      int vertices = UniformInt(rng, 1, n + 1);
      std::vector<std::pair<int, int>> edges;
      for (int e = 0; e < n; ++e) {
        edges.emplace_back(UniformInt(rng, 0, vertices - 1), UniformInt(rng, 0, vertices - 1));
      }
      return Matroid::Graphic(vertices, std::move(edges));
    }
    case GeneratorFamily::kLinear: {
      int dimension = UniformInt(rng, 1, 4);
      std::vector<std::vector<int>> columns(n, std::vector<int>(dimension));
      for (auto& col : columns) {
        for (int& x : col) x = UniformInt(rng, 0, 1);
      }
      return Matroid::Linear(2, std::move(columns));
    }
    case GeneratorFamily::kPartition: {
      int labels = n == 0 ? 1 : UniformInt(rng, 1, n);
      std::vector<std::vector<int>> by_label(labels);
      for (int e = 0; e < n; ++e) by_label[UniformInt(rng, 0, labels - 1)].push_back(e);
      std::vector<std::vector<int>> blocks;
      std::vector<int> caps;
      for (auto& block : by_label) {
        if (block.empty()) continue;
        caps.push_back(UniformInt(rng, 0, static_cast<int>(block.size())));
        blocks.push_back(std::move(block));
      }
      return Matroid::Partition(std::move(blocks), std::move(caps));
    }
    case GeneratorFamily::kMixed:
      break;
  }
  throw std::logic_error("unreachable generator family");
}

InstanceSpec GenerateRandom(GeneratorFamily family, int n, int m, std::uint64_t seed) {
  CheckGroundSize(n);
  if (m < 1) throw std::invalid_argument("need at least one matroid");
  std::mt19937_64 rng(seed);
  InstanceSpec spec;
  for (int i = 0; i < m; ++i) spec.matroids.push_back(RandomMatroid(family, n, rng));
  return spec;
}

}  // namespace matroid
