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

#ifndef PCC_ALIGN_HPP_
#define PCC_ALIGN_HPP_

#include <vector>

#include "pcc/camera.hpp"
#include "pcc/geometry.hpp"

namespace pcc {

// Moves a camera-frame cloud into the world frame, the exact inverse of the
// world-to-camera transform used by project().
PointCloud align_by_camera(const PointCloud& cloud, const CameraParams& cam);

// Least-squares proper rigid motion min sum ||R*src + t - dst||^2 via the
// cross-covariance SVD, with reflection correction so det(R) = +1. Requires
// at least 3 non-collinear point pairs.
RigidTransform rigid_fit(const std::vector<Point3>& src,
                         const std::vector<Point3>& dst);

struct IcpResult {
  RigidTransform transform;
  double rms = 0.0;
  std::size_t iterations = 0;
};

// Classic point-to-point iteration: nearest-neighbor correspondences, rigid
// fit, apply; stops when the RMS improves by less than tol or after
// max_iters. RMS never increases between iterations. Local method: far-off
// initial poses may converge to the wrong minimum, which the caller can
// detect through the reported RMS.
IcpResult icp(const PointCloud& src, const PointCloud& dst,
              std::size_t max_iters = 50, double tol = 1e-10);

}  // namespace pcc

#endif  // PCC_ALIGN_HPP_
