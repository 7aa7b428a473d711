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

// Data-parallel scans over index ranges [0, count). Every exhaustive search
// in the library (subsets of E, level assignments of E, pairs of subsets)
// is one of these loops. The OpenMP versions split the range statically and
// merge per-thread results with an associative reduction whose tie-break is
// the lowest index, so they return exactly what the serial versions return.
// The serial versions are kept as the reference for tests and benchmarks.

#ifndef MATROID_KERNELS_H_
#define MATROID_KERNELS_H_

#include <cstdint>
#include <limits>
#include <span>

namespace matroid::kernels {

struct Best {
  std::int64_t value;
  std::int64_t index;  // == count when the range was empty
};

// Below this many iterations the OpenMP versions run on the calling thread.
inline constexpr std::int64_t kParallelThreshold = 1 << 12;

namespace serial {

template <class Objective>
Best ArgMin(std::int64_t count, Objective&& objective) {
  Best best{std::numeric_limits<std::int64_t>::max(), count};
  for (std::int64_t i = 0; i < count; ++i) {
    std::int64_t v = objective(i);
    if (v < best.value) best = {v, i};
  }
  return best;
}

template <class Objective>
Best ArgMax(std::int64_t count, Objective&& objective) {
  Best best{std::numeric_limits<std::int64_t>::min(), count};
  for (std::int64_t i = 0; i < count; ++i) {
    std::int64_t v = objective(i);
    if (v > best.value) best = {v, i};
  }
  return best;
}

// Lowest i with pred(i), or count.
template <class Predicate>
std::int64_t FirstWhere(std::int64_t count, Predicate&& pred) {
  for (std::int64_t i = 0; i < count; ++i) {
    if (pred(i)) return i;
  }
  return count;
}

template <class T, class Fn>
void Fill(std::span<T> out, Fn&& fn) {
  const auto count = static_cast<std::int64_t>(out.size());
  for (std::int64_t i = 0; i < count; ++i) out[i] = fn(i);
}

}  // namespace serial

template <class Objective>
Best ArgMin(std::int64_t count, Objective&& objective) {
  Best best{std::numeric_limits<std::int64_t>::max(), count};
#pragma omp parallel if (count >= kParallelThreshold)
  {
    Best local{std::numeric_limits<std::int64_t>::max(), count};
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      std::int64_t v = objective(i);
      if (v < local.value) local = {v, i};
    }
#pragma omp critical(matroid_kernels_argmin)
    {
      if (local.value < best.value ||
          (local.value == best.value && local.index < best.index)) {
        best = local;
      }
    }
  }
  return best;
}

template <class Objective>
Best ArgMax(std::int64_t count, Objective&& objective) {
  Best best{std::numeric_limits<std::int64_t>::min(), count};
#pragma omp parallel if (count >= kParallelThreshold)
  {
    Best local{std::numeric_limits<std::int64_t>::min(), count};
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      std::int64_t v = objective(i);
      if (v > local.value) local = {v, i};
    }
#pragma omp critical(matroid_kernels_argmax)
    {
      if (local.value > best.value ||
          (local.value == best.value && local.index < best.index)) {
        best = local;
      }
    }
  }
  return best;
}

template <class Predicate>
std::int64_t FirstWhere(std::int64_t count, Predicate&& pred) {
  std::int64_t first = count;
#pragma omp parallel if (count >= kParallelThreshold)
  {
    std::int64_t local = count;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      // Static chunks are increasing per thread; later hits cannot win.
      if (local == count && pred(i)) local = i;
    }
#pragma omp critical(matroid_kernels_first)
    {
      if (local < first) first = local;
    }
  }
  return first;
}

template <class T, class Fn>
void Fill(std::span<T> out, Fn&& fn) {
  const auto count = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static) if (count >= kParallelThreshold)
  for (std::int64_t i = 0; i < count; ++i) out[i] = fn(i);
}

}  // namespace matroid::kernels

#endif  // MATROID_KERNELS_H_
