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

#ifndef PCC_IMAGE_FEATURES_HPP_
#define PCC_IMAGE_FEATURES_HPP_

#include <array>
#include <vector>

#include "pcc/camera.hpp"
#include "pcc/depth.hpp"
#include "pcc/geometry.hpp"

namespace pcc {

// Dense multi-channel 2D grid, row-major (v, u, c).
struct Image {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<double> data;

  Image() = default;
  Image(int w, int h, int c)
      : width(w),
        height(h),
        channels(c),
        data(static_cast<std::size_t>(w) * h * c, 0.0) {}

  double at(int u, int v, int c) const {
    return data[(static_cast<std::size_t>(v) * width + u) * channels + c];
  }
  double& at(int u, int v, int c) {
    return data[(static_cast<std::size_t>(v) * width + u) * channels + c];
  }
};

inline constexpr int kFeatureImageChannels = 8;
inline constexpr std::array<int, 4> kPyramidSizes = {56, 28, 14, 7};
inline constexpr int kPixelFeatureDim =
    4 * kFeatureImageChannels;  // concatenated across the 4 levels

// Four feature grids at 56/28/14/7 produced by mean pooling (4x4 first, then
// 2x2 per level), channel count preserved.
struct FeaturePyramid {
  std::array<Image, 4> levels;
};

// 8-channel stand-in for learned image features: inverse-depth intensity
// (1/(1+z), background 0) plus the differences to 7 of the 8 neighbors
// (border-clamped), one channel per offset.
Image feature_image_from_depth(const DepthImage& depth);

// Requires a 224x224 input.
FeaturePyramid build_feature_pyramid(const Image& image);

// Per-point image feature: project, rescale to each level, bilinear-sample
// with border clamping, concatenate across levels (4*C values per point).
// Throws if any point is behind the camera.
std::vector<std::vector<double>> perceptual_pool(const FeaturePyramid& pyramid,
                                                 const CameraParams& cam,
                                                 const PointCloud& cloud);

// Row-major ceil(sqrt(n)) x ceil(sqrt(n)) grid over [-1,1]^2, truncated to n
// entries.
std::vector<std::array<double, 2>> grid_feature(std::size_t n);

}  // namespace pcc

#endif  // PCC_IMAGE_FEATURES_HPP_
