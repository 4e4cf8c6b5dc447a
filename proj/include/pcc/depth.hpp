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

#ifndef PCC_DEPTH_HPP_
#define PCC_DEPTH_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pcc/camera.hpp"
#include "pcc/geometry.hpp"

namespace pcc {

// Camera-frame z per pixel, +inf where nothing was splatted.
struct DepthImage {
  int width = 0;
  int height = 0;
  std::vector<double> depth;

  DepthImage() = default;
  DepthImage(int w, int h)
      : width(w),
        height(h),
        depth(static_cast<std::size_t>(w) * h,
              std::numeric_limits<double>::infinity()) {}

  double at(int u, int v) const {
    return depth[static_cast<std::size_t>(v) * width + u];
  }
  double& at(int u, int v) {
    return depth[static_cast<std::size_t>(v) * width + u];
  }
  std::size_t finite_count() const;
};

// Point-splat z-buffer: every point covers a splat_px x splat_px square of
// pixels around its rounded projection and each pixel keeps the minimum
// depth. Points behind the camera or outside the frame are skipped.
DepthImage render_depth(const CameraParams& cam, const PointCloud& cloud,
                        int splat_px = 1);

// Samples n_r finite pixels (without replacement when enough exist, with
// replacement otherwise), inverts the pinhole model at each pixel center and
// returns the points in the world frame. Throws data_error
// ("all-background depth") when no pixel is finite.
PointCloud backproject_depth(const CameraParams& cam, const DepthImage& depth,
                             std::size_t n_r, std::uint64_t rng_seed);

// 16-bit PGM serialization. Finite depth maps linearly onto [1, 65535] over
// [near, far]; background is 0. The default range covers the default orbit
// radius with margin.
inline constexpr double kDepthPgmNear = 0.25;
inline constexpr double kDepthPgmFar = 8.0;

void write_depth_pgm(const std::string& path, const DepthImage& depth,
                     double near = kDepthPgmNear, double far = kDepthPgmFar);
DepthImage read_depth_pgm(const std::string& path,
                          double near = kDepthPgmNear,
                          double far = kDepthPgmFar);

}  // namespace pcc

#endif  // PCC_DEPTH_HPP_
