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

#include "pcc/pointnet.hpp"

#include <algorithm>
#include <limits>

#include "pcc/error.hpp"

namespace pcc {

PointNetParams PointNetParams::seeded(std::uint64_t seed) {
  PointNetParams params;
  Rng rng(seed);
  params.l1.init_uniform(rng);
  params.l2.init_uniform(rng);
  params.l3.init_uniform(rng);
  return params;
}

std::vector<double> global_point_feature(const PointCloud& cloud,
                                         const PointNetParams& params) {
  if (cloud.empty()) throw data_error("point feature: empty cloud");

  std::vector<double> global(kGlobalFeatureDim,
                             -std::numeric_limits<double>::infinity());
#pragma omp parallel if (cloud.size() > 512)
  {
    std::vector<double> h1(64), a1(64), h2(128), a2(128),
        h3(kGlobalFeatureDim);
    std::vector<double> local(kGlobalFeatureDim,
                              -std::numeric_limits<double>::infinity());
    const auto n = static_cast<std::int64_t>(cloud.size());
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const double xyz[3] = {cloud[i].x, cloud[i].y, cloud[i].z};
      params.l1.forward(xyz, h1.data());
      relu(h1.data(), a1.data(), h1.size());
      params.l2.forward(a1.data(), h2.data());
      relu(h2.data(), a2.data(), h2.size());
      params.l3.forward(a2.data(), h3.data());
      for (std::size_t c = 0; c < kGlobalFeatureDim; ++c) {
        local[c] = std::max(local[c], h3[c]);
      }
    }
    // max is order independent, so the merge order cannot matter.
#pragma omp critical
    for (std::size_t c = 0; c < kGlobalFeatureDim; ++c) {
      global[c] = std::max(global[c], local[c]);
    }
  }
  return global;
}

}  // namespace pcc
