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

#ifndef PCC_POINTNET_HPP_
#define PCC_POINTNET_HPP_

#include <cstdint>
#include <vector>

#include "pcc/geometry.hpp"
#include "pcc/nn.hpp"

namespace pcc {

inline constexpr std::size_t kGlobalFeatureDim = 128;

// Shared per-point MLP 3 -> 64 -> 128 -> 128 (ReLU between layers) followed
// by a coordinatewise max over points. These encoders stay fixed after
// seeded initialization.
struct PointNetParams {
  Linear l1{3, 64};
  Linear l2{64, 128};
  Linear l3{128, kGlobalFeatureDim};

  static PointNetParams seeded(std::uint64_t seed);
};

// Permutation-invariant global feature of a cloud.
std::vector<double> global_point_feature(const PointCloud& cloud,
                                         const PointNetParams& params);

}  // namespace pcc

#endif  // PCC_POINTNET_HPP_
