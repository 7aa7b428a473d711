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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "matroid/family.h"
#include "matroid/subset.h"

using matroid::Family;
using matroid::Mask;
using matroid::Subset;

TEST_CASE("set algebra is exact") {
  Subset a = Subset::Of(5, {0, 2, 4});
  Subset b = Subset::Of(5, {2, 3});
  CHECK((a | b) == Subset::Of(5, {0, 2, 3, 4}));
  CHECK((a & b) == Subset::Of(5, {2}));
  CHECK((a - b) == Subset::Of(5, {0, 4}));
  CHECK(a.complement() == Subset::Of(5, {1, 3}));
  CHECK(a.size() == 3);
  CHECK(a.contains(4));
  CHECK_FALSE(a.contains(5));
  CHECK(a.with(1).without(0) == Subset::Of(5, {1, 2, 4}));
  CHECK(Subset::Of(5, {2}).is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));
  CHECK(a.ToString() == "{0,2,4}");
  CHECK(Subset::Empty(3).ToString() == "{}");
  CHECK(a.elements() == std::vector<int>{0, 2, 4});
}

TEST_CASE("ground-set bounds are enforced") {
  CHECK_THROWS_AS(Subset(3, 0b1000), std::invalid_argument);
  CHECK_THROWS_AS(Subset::Of(3, {3}), std::invalid_argument);
  CHECK_THROWS_AS(Subset::Of(25, {}), std::invalid_argument);
  CHECK_THROWS_AS(Subset::Of(3, {0}) | Subset::Of(4, {0}), std::invalid_argument);
  CHECK_NOTHROW(Subset::Full(24));
  CHECK(Subset::Full(24).size() == 24);
  CHECK(Subset::Full(0).empty());
}

TEST_CASE("expand and compress are inverse on the image") {
  std::vector<int> positions = {1, 4, 5};
  for (Mask local = 0; local < 8; ++local) {
    Mask global = matroid::ExpandMask(local, positions);
    CHECK((global & ~Mask{0b110010}) == 0);
    CHECK(matroid::CompressMask(global, positions) == local);
  }
}

TEST_CASE("family dual takes complements of maximal members") {
  // {}, {0}, {1}: maximal members {0},{1}; sets disjoint from one of them.
  Family f = Family::FromSets(2, std::vector<Subset>{Subset::Of(2, {}), Subset::Of(2, {0}),
                                                     Subset::Of(2, {1})});
  Family d = matroid::DualFamily(f);
  CHECK(d.count() == 3);
  CHECK(d.contains(Subset::Of(2, {0})));
  CHECK_FALSE(d.contains(Subset::Of(2, {0, 1})));

  Family g = Family::FromSets(3, std::vector<Subset>{Subset::Of(3, {})});
  CHECK(matroid::DualFamily(g).count() == 8);
}

TEST_CASE("minimal difference orders by size then mask") {
  Family big = Family::FromSets(3, std::vector<Subset>{Subset::Of(3, {}), Subset::Of(3, {2}),
                                                       Subset::Of(3, {0, 1}),
                                                       Subset::Of(3, {1})});
  Family small = Family::FromSets(3, std::vector<Subset>{Subset::Of(3, {})});
  auto d = big.MinimalDifference(small);
  REQUIRE(d.has_value());
  CHECK(*d == Subset::Of(3, {1}));
  CHECK_FALSE(small.MinimalDifference(big).has_value());
  CHECK(small.is_subfamily_of(big));
}
