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

#ifndef PCC_PARTFILTER_HPP_
#define PCC_PARTFILTER_HPP_

#include <cstdint>
#include <vector>

#include "pcc/geometry.hpp"

namespace pcc {

// Disjoint split of the coarse-cloud indices. Fine points sit strictly below
// the density threshold against the partial input (they carry trustworthy
// geometry and are only lightly refined); coarse points are everything else.
struct Partition {
  std::vector<std::size_t> fine;
  std::vector<std::size_t> coarse;
  double d_thr = 0.0;
};

// Density threshold: split the cloud into random halves, take every point's
// squared nearest-neighbor distance to the opposite half, and average over
// all points. Deterministic given the seed.
double estimate_density_threshold(const PointCloud& coarse,
                                  std::uint64_t rng_seed);

// FPS subset of size n_c of the merged cloud (selection order).
PointCloud build_coarse(const PointCloud& merged, std::size_t n_c,
                        std::size_t seed_index = 0);

// Threshold rule: fine = { p : min_q in partial ||p-q||^2 < d_thr }, coarse
// is the complement. Index lists come back sorted ascending.
Partition partition_fine_coarse(const PointCloud& coarse,
                                const PointCloud& partial, double d_thr);

// Fixed-size variant: exactly n_m coarse points, chosen as those with the
// largest distance to the partial cloud (ties to the lowest index). d_thr is
// reported as the smallest coarse-part distance.
Partition partition_force_coarse(const PointCloud& coarse,
                                 const PointCloud& partial, std::size_t n_m);

}  // namespace pcc

#endif  // PCC_PARTFILTER_HPP_
