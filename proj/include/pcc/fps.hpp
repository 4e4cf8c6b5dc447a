/*
Copyright 2026 The pcc Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef PCC_FPS_HPP_
#define PCC_FPS_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "pcc/geometry.hpp"

namespace pcc {

// Greedy farthest point sampling. Starts at seed_index and repeatedly adds
// the point with the largest min squared distance to the selected set, ties
// broken by lowest index. Output order is selection order. The distance
// update and the argmax run in parallel; the argmax combines per-thread
// results under a total order, so the selection is identical at any thread
// count.
std::vector<std::size_t> farthest_point_sample(const PointCloud& cloud,
                                               std::size_t k,
                                               std::size_t seed_index = 0);

// Splits the indices {0..n-1} into two disjoint halves whose sizes differ by
// at most one (the first half gets the extra index when n is odd). The split
// is a seeded Fisher-Yates shuffle; both halves are returned sorted.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> random_halves(
    const PointCloud& cloud, std::uint64_t rng_seed);

}  // namespace pcc

#endif  // PCC_FPS_HPP_
