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

#include "pcc/depth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "pcc/error.hpp"
#include "pcc/rng.hpp"

namespace pcc {

std::size_t DepthImage::finite_count() const {
  std::size_t n = 0;
  for (double d : depth) n += std::isfinite(d);
  return n;
}

DepthImage render_depth(const CameraParams& cam, const PointCloud& cloud,
                        int splat_px) {
  if (cloud.empty()) throw data_error("render: empty cloud");
  if (splat_px < 1) throw data_error("render: splat must be >= 1");

  DepthImage img(cam.width, cam.height);
  const RigidTransform to_cam = world_to_camera(cam);
  const int lo = -(splat_px - 1) / 2;

  for (const Point3& p : cloud.points) {
    const Point3 pc = to_cam.apply(p);
    if (pc.z <= 0.0) continue;
    const double u = cam.u0 + cam.focal_px * pc.x / pc.z;
    const double v = cam.v0 + cam.focal_px * pc.y / pc.z;
    const auto cu = static_cast<int>(std::llround(u));
    const auto cv = static_cast<int>(std::llround(v));
    for (int dv = lo; dv < lo + splat_px; ++dv) {
      for (int du = lo; du < lo + splat_px; ++du) {
        const int px = cu + du;
        const int py = cv + dv;
        if (px < 0 || px >= img.width || py < 0 || py >= img.height) continue;
        img.at(px, py) = std::min(img.at(px, py), pc.z);
      }
    }
  }
  return img;
}

PointCloud backproject_depth(const CameraParams& cam, const DepthImage& depth,
                             std::size_t n_r, std::uint64_t rng_seed) {
  if (n_r < 1) throw data_error("backproject: n_r must be >= 1");

  std::vector<std::pair<int, int>> finite;
  for (int v = 0; v < depth.height; ++v) {
    for (int u = 0; u < depth.width; ++u) {
      if (std::isfinite(depth.at(u, v))) finite.emplace_back(u, v);
    }
  }
  if (finite.empty()) throw data_error("all-background depth");

  Rng rng(rng_seed);
  std::vector<std::pair<int, int>> picked;
  picked.reserve(n_r);
  if (finite.size() >= n_r) {
    // Partial Fisher-Yates: the first n_r slots become the sample.
    for (std::size_t i = 0; i < n_r; ++i) {
      const std::size_t j = i + rng.below(finite.size() - i);
      std::swap(finite[i], finite[j]);
      picked.push_back(finite[i]);
    }
  } else {
    for (std::size_t i = 0; i < n_r; ++i) {
      picked.push_back(finite[rng.below(finite.size())]);
    }
  }

  PointCloud out;
  out.tag = CloudTag::kReconstructed;
  out.points.reserve(n_r);
  for (const auto& [u, v] : picked) {
    out.points.push_back(backproject_pixel(cam, u, v, depth.at(u, v)));
  }
  return out;
}

void write_depth_pgm(const std::string& path, const DepthImage& depth,
                     double near, double far) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write " + path);
  out << "P5\n" << depth.width << " " << depth.height << "\n65535\n";
  const double scale = 65534.0 / (far - near);
  for (double d : depth.depth) {
    std::uint16_t pix = 0;
    if (std::isfinite(d)) {
      const double t = std::clamp((d - near) * scale, 0.0, 65534.0);
      pix = static_cast<std::uint16_t>(1 + std::llround(t));
    }
    // PGM 16-bit samples are big-endian.
    const char bytes[2] = {static_cast<char>(pix >> 8),
                           static_cast<char>(pix & 0xff)};
    out.write(bytes, 2);
  }
}

DepthImage read_depth_pgm(const std::string& path, double near, double far) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open " + path);
  std::string magic;
  int width = 0, height = 0, maxval = 0;
  in >> magic >> width >> height >> maxval;
  if (magic != "P5" || maxval != 65535 || width <= 0 || height <= 0) {
    throw data_error(path + ": expected 16-bit binary PGM");
  }
  in.get();  // single whitespace after maxval

  DepthImage img(width, height);
  const double scale = (far - near) / 65534.0;
  std::vector<char> raw(static_cast<std::size_t>(width) * height * 2);
  in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
    throw data_error(path + ": truncated pixel data");
  }
  for (std::size_t i = 0; i < img.depth.size(); ++i) {
    const auto hi = static_cast<unsigned char>(raw[2 * i]);
    const auto lo = static_cast<unsigned char>(raw[2 * i + 1]);
    const std::uint16_t pix = static_cast<std::uint16_t>((hi << 8) | lo);
    if (pix != 0) img.depth[i] = near + (pix - 1) * scale;
  }
  return img;
}

}  // namespace pcc
