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

#include "pcc/image_features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "pcc/error.hpp"

namespace pcc {
namespace {

// 7 of the 8 compass neighbors; one difference channel each.
constexpr int kOffsets[7][2] = {{1, 0}, {1, 1},   {0, 1},  {-1, 1},
                                {-1, 0}, {-1, -1}, {0, -1}};

Image mean_pool(const Image& src, int factor) {
  Image out(src.width / factor, src.height / factor, src.channels);
  const double inv = 1.0 / (factor * factor);
  for (int v = 0; v < out.height; ++v) {
    for (int u = 0; u < out.width; ++u) {
      for (int c = 0; c < out.channels; ++c) {
        double acc = 0.0;
        for (int dv = 0; dv < factor; ++dv) {
          for (int du = 0; du < factor; ++du) {
            acc += src.at(u * factor + du, v * factor + dv, c);
          }
        }
        out.at(u, v, c) = acc * inv;
      }
    }
  }
  return out;
}

double bilinear(const Image& img, double u, double v, int c) {
  const double i0f = std::floor(u);
  const double j0f = std::floor(v);
  const double fu = u - i0f;
  const double fv = v - j0f;
  const auto clamp_u = [&](int i) { return std::clamp(i, 0, img.width - 1); };
  const auto clamp_v = [&](int j) { return std::clamp(j, 0, img.height - 1); };
  const int i0 = clamp_u(static_cast<int>(i0f));
  const int i1 = clamp_u(static_cast<int>(i0f) + 1);
  const int j0 = clamp_v(static_cast<int>(j0f));
  const int j1 = clamp_v(static_cast<int>(j0f) + 1);
  return (1 - fv) * ((1 - fu) * img.at(i0, j0, c) + fu * img.at(i1, j0, c)) +
         fv * ((1 - fu) * img.at(i0, j1, c) + fu * img.at(i1, j1, c));
}

}  // namespace

Image feature_image_from_depth(const DepthImage& depth) {
  Image img(depth.width, depth.height, kFeatureImageChannels);
  const auto intensity = [&](int u, int v) {
    const double d = depth.at(std::clamp(u, 0, depth.width - 1),
                              std::clamp(v, 0, depth.height - 1));
    return std::isfinite(d) ? 1.0 / (1.0 + d) : 0.0;
  };
  for (int v = 0; v < depth.height; ++v) {
    for (int u = 0; u < depth.width; ++u) {
      const double center = intensity(u, v);
      img.at(u, v, 0) = center;
      for (int k = 0; k < 7; ++k) {
        img.at(u, v, k + 1) =
            intensity(u + kOffsets[k][0], v + kOffsets[k][1]) - center;
      }
    }
  }
  return img;
}

FeaturePyramid build_feature_pyramid(const Image& image) {
  if (image.width != 224 || image.height != 224) {
    throw data_error("feature pyramid: input must be 224x224");
  }
  FeaturePyramid pyr;
  pyr.levels[0] = mean_pool(image, 4);       // 56
  pyr.levels[1] = mean_pool(pyr.levels[0], 2);  // 28
  pyr.levels[2] = mean_pool(pyr.levels[1], 2);  // 14
  pyr.levels[3] = mean_pool(pyr.levels[2], 2);  // 7
  return pyr;
}

std::vector<std::vector<double>> perceptual_pool(const FeaturePyramid& pyramid,
                                                 const CameraParams& cam,
                                                 const PointCloud& cloud) {
  const int channels = pyramid.levels[0].channels;
  std::vector<std::vector<double>> features(
      cloud.size(), std::vector<double>(4 * channels, 0.0));

  // Projection first (it can throw; keep that out of the parallel region).
  std::vector<PixelCoord> pix(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    pix[i] = project(cam, cloud[i]);
  }

  const auto n = static_cast<std::int64_t>(cloud.size());
#pragma omp parallel for schedule(static) if (n > 256)
  for (std::int64_t i = 0; i < n; ++i) {
    for (int level = 0; level < 4; ++level) {
      const Image& img = pyramid.levels[level];
      // Map full-resolution pixel centers onto level-grid coordinates.
      const double su = static_cast<double>(img.width) / cam.width;
      const double sv = static_cast<double>(img.height) / cam.height;
      const double lu = (pix[i].u + 0.5) * su - 0.5;
      const double lv = (pix[i].v + 0.5) * sv - 0.5;
      for (int c = 0; c < channels; ++c) {
        features[i][level * channels + c] = bilinear(img, lu, lv, c);
      }
    }
  }
  return features;
}

std::vector<std::array<double, 2>> grid_feature(std::size_t n) {
  if (n < 1) throw data_error("grid feature: n must be >= 1");
  const auto g = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(n))));
  std::vector<std::array<double, 2>> grid;
  grid.reserve(n);
  for (std::size_t row = 0; row < g && grid.size() < n; ++row) {
    for (std::size_t col = 0; col < g && grid.size() < n; ++col) {
      const double x =
          g == 1 ? -1.0 : -1.0 + 2.0 * static_cast<double>(col) / (g - 1);
      const double y =
          g == 1 ? -1.0 : -1.0 + 2.0 * static_cast<double>(row) / (g - 1);
      grid.push_back({x, y});
    }
  }
  return grid;
}

}  // namespace pcc
