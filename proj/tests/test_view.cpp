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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "pcc/camera.hpp"
#include "pcc/depth.hpp"
#include "pcc/error.hpp"
#include "pcc/image_features.hpp"
#include "pcc/pointnet.hpp"
#include "pcc/rng.hpp"
#include "test_util.hpp"

using namespace pcc;
using pcc::testing::cloud_of;
using pcc::testing::random_cloud;

namespace {

PointCloud unit_sphere_cloud(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  PointCloud cloud;
  cloud.points.reserve(n);
  while (cloud.size() < n) {
    const double z = rng.uniform(-1.0, 1.0);
    const double theta = rng.uniform(0.0, 6.283185307179586);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    cloud.points.push_back({r * std::cos(theta), r * std::sin(theta), z});
  }
  return cloud;
}

}  // namespace

TEST_CASE("camera position convention") {
  const CameraParams cam = camera_from_view(0, 0, 2);
  const Point3 c = camera_position(cam);
  CHECK(c.x == doctest::Approx(2.0));
  CHECK(c.y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(c.z == doctest::Approx(0.0).epsilon(1e-12));

  // Opposite azimuth mirrors the xy position.
  const Point3 a0 = camera_position(camera_from_view(30, 25, 2));
  const Point3 a180 = camera_position(camera_from_view(210, 25, 2));
  CHECK(a180.x == doctest::Approx(-a0.x));
  CHECK(a180.y == doctest::Approx(-a0.y));
  CHECK(a180.z == doctest::Approx(a0.z));

  CHECK_THROWS_AS(camera_from_view(0, 0, 0), data_error);
}

TEST_CASE("world_to_camera is a proper rigid motion; origin ahead") {
  for (double az : {0.0, 45.0, 137.0, 260.0}) {
    for (double el : {-40.0, 0.0, 25.0, 80.0}) {
      const CameraParams cam = camera_from_view(az, el, 2.0);
      const RigidTransform t = world_to_camera(cam);
      CHECK(t.orthonormality_error() < 1e-12);
      CHECK(t.determinant() == doctest::Approx(1.0));
      // The origin sits on the optical axis at the camera distance.
      const Point3 o = t.apply({0, 0, 0});
      CHECK(o.x == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(o.y == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(o.z == doctest::Approx(2.0));
    }
  }
}

TEST_CASE("project: principal point, hand value, behind-camera error") {
  const CameraParams cam = camera_from_view(33, 12, 2);
  const PixelCoord onaxis = project(cam, {0, 0, 0});
  CHECK(onaxis.u == doctest::Approx(112.0));
  CHECK(onaxis.v == doctest::Approx(112.0));

  CameraParams cam100 = camera_from_view(0, 0, 2);
  cam100.focal_px = 100.0;
  const Point3 world = camera_to_world(cam100).apply({0.5, 0, 1});
  const PixelCoord p = project(cam100, world);
  CHECK(p.u == doctest::Approx(162.0));
  CHECK(p.v == doctest::Approx(112.0));
  CHECK(p.depth == doctest::Approx(1.0));

  const Point3 behind = camera_position(cam100) * 2.0;
  CHECK_THROWS_WITH_AS(project(cam100, behind), "behind camera",
                       numeric_error);
}

TEST_CASE("default view ring keeps the unit sphere inside the frame") {
  const PointCloud sphere = unit_sphere_cloud(2000, 5);
  const auto views = default_view_ring();
  REQUIRE(views.size() == 24);
  for (std::size_t k = 0; k < views.size(); ++k) {
    CHECK(views[k].azimuth_deg == doctest::Approx(k * 15.0));
    double max_r = 0.0;
    for (const Point3& p : sphere.points) {
      const PixelCoord pix = project(views[k], p);
      max_r = std::max({max_r, std::abs(pix.u - 112.0),
                        std::abs(pix.v - 112.0)});
    }
    CHECK(max_r < 112.0);
  }
}

TEST_CASE("render_depth: background, z-buffer rule, single splat") {
  const CameraParams cam = camera_from_view(0, 0, 2);

  // Two points on the same ray: the nearer depth wins.
  const Point3 near_pt{0.5, 0, 0};
  const Point3 far_pt{-0.5, 0, 0};
  const DepthImage two = render_depth(cam, cloud_of({far_pt, near_pt}), 1);
  CHECK(two.at(112, 112) == doctest::Approx(1.5));
  CHECK(two.finite_count() == 1);

  const Point3 off{0.3, 0.1, -0.2};
  const DepthImage one = render_depth(cam, cloud_of({off}), 1);
  CHECK(one.finite_count() == 1);
  const PixelCoord pix = project(cam, off);
  const int cu = static_cast<int>(std::llround(pix.u));
  const int cv = static_cast<int>(std::llround(pix.v));
  CHECK(std::isfinite(one.at(cu, cv)));
  CHECK(one.at(cu, cv) == doctest::Approx(pix.depth));
  CHECK(std::isinf(one.at(0, 0)));
}

TEST_CASE("backproject: roundtrip, containment, replacement") {
  const CameraParams cam = camera_from_view(75, 25, 2.5);
  const PointCloud sphere = unit_sphere_cloud(1500, 9);
  const DepthImage depth = render_depth(cam, sphere, 1);
  REQUIRE(depth.finite_count() > 100);

  const PointCloud rec = backproject_depth(cam, depth, 784, 7);
  CHECK(rec.size() == 784);
  // Pixel-center quantization moves a ray by at most half a pixel diagonal,
  // i.e. 0.5*sqrt(2)*z/f laterally at depth z.
  const double splat_tol =
      0.5 * std::sqrt(2.0) * (cam.distance + 1.0) / cam.focal_px;
  for (const Point3& p : rec.points) {
    // Reprojecting a backprojected point lands on its source pixel center.
    const PixelCoord pix = project(cam, p);
    const double du = pix.u - std::llround(pix.u);
    const double dv = pix.v - std::llround(pix.v);
    CHECK(std::abs(du) < 0.5);
    CHECK(std::abs(dv) < 0.5);
    CHECK(p.norm() <= 1.0 + splat_tol);
  }

  // A single finite pixel with replacement sampling gives n copies.
  DepthImage single(224, 224);
  single.at(50, 60) = 2.0;
  const PointCloud four = backproject_depth(cam, single, 4, 3);
  REQUIRE(four.size() == 4);
  for (const Point3& p : four.points) {
    CHECK(squared_distance(p, four[0]) == 0.0);
  }

  DepthImage empty(224, 224);
  CHECK_THROWS_WITH_AS(backproject_depth(cam, empty, 4, 3),
                       "all-background depth", data_error);
}

TEST_CASE("depth pgm roundtrip") {
  const CameraParams cam = camera_from_view(10, 25, 2.5);
  const DepthImage depth = render_depth(cam, unit_sphere_cloud(500, 2), 3);
  const std::string path =
      (std::filesystem::temp_directory_path() / "depth_test.pgm").string();
  write_depth_pgm(path, depth);
  const DepthImage back = read_depth_pgm(path);
  REQUIRE(back.width == depth.width);
  CHECK(back.finite_count() == depth.finite_count());
  const double quantum = (kDepthPgmFar - kDepthPgmNear) / 65534.0;
  for (std::size_t i = 0; i < depth.depth.size(); ++i) {
    if (std::isfinite(depth.depth[i])) {
      CHECK(std::abs(back.depth[i] - depth.depth[i]) <= quantum);
    } else {
      CHECK(std::isinf(back.depth[i]));
    }
  }
  std::remove(path.c_str());
}

TEST_CASE("feature pyramid: sizes, constant image, mean conservation") {
  Image constant(224, 224, 3);
  for (double& v : constant.data) v = 0.75;
  const FeaturePyramid pyr = build_feature_pyramid(constant);
  CHECK(pyr.levels[0].width == 56);
  CHECK(pyr.levels[1].width == 28);
  CHECK(pyr.levels[2].width == 14);
  CHECK(pyr.levels[3].width == 7);
  for (const Image& level : pyr.levels) {
    CHECK(level.channels == 3);
    for (double v : level.data) CHECK(v == doctest::Approx(0.75));
  }

  Rng rng(13);
  Image noisy(224, 224, 2);
  for (double& v : noisy.data) v = rng.uniform();
  const FeaturePyramid npyr = build_feature_pyramid(noisy);
  for (int c = 0; c < 2; ++c) {
    double input_mean = 0.0;
    for (int v = 0; v < 224; ++v) {
      for (int u = 0; u < 224; ++u) input_mean += noisy.at(u, v, c);
    }
    input_mean /= 224.0 * 224.0;
    for (const Image& level : npyr.levels) {
      double level_mean = 0.0;
      for (int v = 0; v < level.height; ++v) {
        for (int u = 0; u < level.width; ++u) level_mean += level.at(u, v, c);
      }
      level_mean /= static_cast<double>(level.width) * level.height;
      CHECK(std::abs(level_mean - input_mean) < 1e-12);
    }
  }

  CHECK_THROWS_AS(build_feature_pyramid(Image(100, 100, 1)), data_error);
}

TEST_CASE("perceptual pool: constant value, node hit, midpoint") {
  const CameraParams cam = camera_from_view(0, 0, 2);

  Image base(224, 224, 1);
  for (double& v : base.data) v = 0.4;
  FeaturePyramid pyr = build_feature_pyramid(base);

  Rng rng(3);
  const PointCloud cloud = random_cloud(rng, 20, -0.4, 0.4);
  const auto pooled = perceptual_pool(pyr, cam, cloud);
  REQUIRE(pooled.size() == cloud.size());
  for (const auto& f : pooled) {
    REQUIRE(f.size() == 4);
    for (double v : f) CHECK(v == doctest::Approx(0.4));
  }

  // Midpoint between level-3 nodes (0,0)=0 and (1,0)=1 interpolates to 0.5.
  // Full-res pixel coordinate of level-3 grid coordinate (0.5, 0):
  // u = (0.5 + 0.5) * 224/7 - 0.5 = 31.5, v = (0 + 0.5) * 32 - 0.5 = 15.5.
  for (double& v : pyr.levels[3].data) v = 0.0;
  pyr.levels[3].at(1, 0, 0) = 1.0;
  const double z = 1.75;
  const Point3 target =
      backproject_pixel(cam, 31.5, 15.5, z);
  const auto mid = perceptual_pool(pyr, cam, cloud_of({target}));
  CHECK(mid[0][3] == doctest::Approx(0.5));

  // Node hit: level-3 grid coordinate (1, 0) exactly.
  const double u_node = (1.0 + 0.5) * 224.0 / 7.0 - 0.5;
  const Point3 node_pt = backproject_pixel(cam, u_node, 15.5, z);
  const auto node = perceptual_pool(pyr, cam, cloud_of({node_pt}));
  CHECK(node[0][3] == doctest::Approx(1.0));
}

TEST_CASE("perceptual pool matches a direct bilinear oracle") {
  const CameraParams cam = camera_from_view(20, 10, 2.5);
  Rng rng(21);
  Image img(224, 224, kFeatureImageChannels);
  for (double& v : img.data) v = rng.uniform(-1.0, 1.0);
  const FeaturePyramid pyr = build_feature_pyramid(img);
  const PointCloud cloud = random_cloud(rng, 64, -0.8, 0.8);

  const auto pooled = perceptual_pool(pyr, cam, cloud);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const PixelCoord pix = project(cam, cloud[i]);
    for (int level = 0; level < 4; ++level) {
      const Image& lv = pyr.levels[level];
      const double lu =
          (pix.u + 0.5) * static_cast<double>(lv.width) / 224.0 - 0.5;
      const double lvv =
          (pix.v + 0.5) * static_cast<double>(lv.height) / 224.0 - 0.5;
      const auto cl = [](double x, int n) {
        return std::clamp(static_cast<int>(std::floor(x)), 0, n - 1);
      };
      const int i0 = cl(lu, lv.width), j0 = cl(lvv, lv.height);
      const int i1 = std::min(i0 + 1, lv.width - 1);
      const int j1 = std::min(j0 + 1, lv.height - 1);
      const double fu = std::clamp(lu - std::floor(lu), 0.0, 1.0);
      const double fv = std::clamp(lvv - std::floor(lvv), 0.0, 1.0);
      for (int c = 0; c < kFeatureImageChannels; ++c) {
        const double want =
            (1 - fv) * ((1 - fu) * lv.at(i0, j0, c) + fu * lv.at(i1, j0, c)) +
            fv * ((1 - fu) * lv.at(i0, j1, c) + fu * lv.at(i1, j1, c));
        CHECK(std::abs(pooled[i][level * kFeatureImageChannels + c] - want) <
              1e-12);
      }
    }
  }
}

TEST_CASE("grid feature: first node, 2x2 grid, range") {
  const auto one = grid_feature(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0][0] == -1.0);
  CHECK(one[0][1] == -1.0);

  const auto four = grid_feature(4);
  REQUIRE(four.size() == 4);
  CHECK(four[0] == std::array<double, 2>{-1, -1});
  CHECK(four[1] == std::array<double, 2>{1, -1});
  CHECK(four[2] == std::array<double, 2>{-1, 1});
  CHECK(four[3] == std::array<double, 2>{1, 1});

  for (std::size_t n : {5, 77, 1024}) {
    const auto grid = grid_feature(n);
    CHECK(grid.size() == n);
    for (const auto& g : grid) {
      CHECK(g[0] >= -1.0);
      CHECK(g[0] <= 1.0);
      CHECK(g[1] >= -1.0);
      CHECK(g[1] <= 1.0);
    }
  }
}

TEST_CASE("global point feature: permutation and duplication invariance") {
  const PointNetParams params = PointNetParams::seeded(77);
  Rng rng(31);
  PointCloud cloud = random_cloud(rng, 100);
  const auto base = global_point_feature(cloud, params);
  REQUIRE(base.size() == kGlobalFeatureDim);

  PointCloud shuffled = cloud;
  std::vector<std::size_t> order(cloud.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  for (std::size_t i = 0; i < order.size(); ++i) {
    shuffled.points[i] = cloud[order[i]];
  }
  CHECK(global_point_feature(shuffled, params) == base);

  PointCloud doubled = merge(cloud, cloud);
  CHECK(global_point_feature(doubled, params) == base);

  // A single point's global feature is its own embedding.
  const PointCloud single = cloud_of({{0.3, -0.2, 0.6}});
  const auto single_feat = global_point_feature(single, params);
  const double xyz[3] = {0.3, -0.2, 0.6};
  std::vector<double> h1(64), a1(64), h2(128), a2(128), h3(128);
  params.l1.forward(xyz, h1.data());
  relu(h1.data(), a1.data(), 64);
  params.l2.forward(a1.data(), h2.data());
  relu(h2.data(), a2.data(), 128);
  params.l3.forward(a2.data(), h3.data());
  for (std::size_t c = 0; c < kGlobalFeatureDim; ++c) {
    CHECK(single_feat[c] == doctest::Approx(h3[c]));
  }
}
