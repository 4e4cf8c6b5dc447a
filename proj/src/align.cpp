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

#include "pcc/align.hpp"

#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

#include "pcc/error.hpp"
#include "pcc/kdtree.hpp"
#include "pcc/reduce.hpp"

namespace pcc {

PointCloud align_by_camera(const PointCloud& cloud, const CameraParams& cam) {
  return camera_to_world(cam).apply(cloud);
}

RigidTransform rigid_fit(const std::vector<Point3>& src,
                         const std::vector<Point3>& dst) {
  if (src.size() != dst.size()) throw data_error("rigid_fit: size mismatch");
  const std::size_t n = src.size();
  if (n < 3) throw data_error("rigid_fit: need at least 3 pairs");

  Point3 c_src{0, 0, 0}, c_dst{0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    c_src += src[i];
    c_dst += dst[i];
  }
  c_src = c_src / static_cast<double>(n);
  c_dst = c_dst / static_cast<double>(n);

  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    const Point3 a = src[i] - c_src;
    const Point3 b = dst[i] - c_dst;
    h(0, 0) += a.x * b.x; h(0, 1) += a.x * b.y; h(0, 2) += a.x * b.z;
    h(1, 0) += a.y * b.x; h(1, 1) += a.y * b.y; h(1, 2) += a.y * b.z;
    h(2, 0) += a.z * b.x; h(2, 1) += a.z * b.y; h(2, 2) += a.z * b.z;
  }

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector3d sing = svd.singularValues();
  // Rank < 2 leaves a rotation about the dominant axis undetermined.
  if (sing(1) <= 1e-12 * std::max(sing(0), 1e-300)) {
    throw numeric_error("rigid_fit: degenerate configuration");
  }

  Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
  d(2, 2) = (svd.matrixV() * svd.matrixU().transpose()).determinant() < 0.0
                ? -1.0
                : 1.0;
  const Eigen::Matrix3d r = svd.matrixV() * d * svd.matrixU().transpose();

  RigidTransform t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t.rotation[3 * i + j] = r(i, j);
  }
  t.translation = c_dst - t.apply(c_src);  // translation still zero here
  return t;
}

IcpResult icp(const PointCloud& src, const PointCloud& dst,
              std::size_t max_iters, double tol) {
  if (src.size() < 3 || dst.size() < 3) {
    throw data_error("icp: need at least 3 points per cloud");
  }
  const SpatialIndex index(dst);
  const auto n = static_cast<std::int64_t>(src.size());

  IcpResult result;
  result.transform = RigidTransform::identity();
  PointCloud current = src;

  const auto rms_against_nn = [&](const PointCloud& cloud,
                                  std::vector<std::size_t>& nn) {
    std::vector<double> d2(cloud.size());
    nn.resize(cloud.size());
#pragma omp parallel for schedule(static) if (n > 512)
    for (std::int64_t i = 0; i < n; ++i) {
      const NearestResult r = index.nearest(cloud[i]);
      nn[i] = r.index;
      d2[i] = r.squared_distance;
    }
    return std::sqrt(pairwise_sum(d2) / static_cast<double>(cloud.size()));
  };

  std::vector<std::size_t> nn;
  double rms = rms_against_nn(current, nn);
  result.rms = rms;

  for (std::size_t iter = 1; iter <= max_iters; ++iter) {
    std::vector<Point3> matched(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) matched[i] = dst[nn[i]];
    const RigidTransform step = rigid_fit(current.points, matched);

    current = step.apply(current);
    result.transform = step.compose(result.transform);
    result.iterations = iter;

    const double next_rms = rms_against_nn(current, nn);
    result.rms = next_rms;
    if (rms - next_rms < tol) break;
    rms = next_rms;
  }
  return result;
}

}  // namespace pcc
