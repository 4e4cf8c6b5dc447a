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

#ifndef PCC_GEOMETRY_HPP_
#define PCC_GEOMETRY_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace pcc {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Point3() = default;
  constexpr Point3(double px, double py, double pz) : x(px), y(py), z(pz) {}

  constexpr Point3 operator+(const Point3& o) const {
    return {x + o.x, y + o.y, z + o.z};
  }
  constexpr Point3 operator-(const Point3& o) const {
    return {x - o.x, y - o.y, z - o.z};
  }
  constexpr Point3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Point3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Point3& operator+=(const Point3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr bool operator==(const Point3& o) const {
    return x == o.x && y == o.y && z == o.z;
  }

  constexpr double dot(const Point3& o) const {
    return x * o.x + y * o.y + z * o.z;
  }
  constexpr Point3 cross(const Point3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  constexpr double squared_norm() const { return dot(*this); }
  double norm() const { return std::sqrt(squared_norm()); }
  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

inline constexpr Point3 operator*(double s, const Point3& p) { return p * s; }

inline constexpr double squared_distance(const Point3& a, const Point3& b) {
  return (a - b).squared_norm();
}

enum class CloudTag {
  kNone,
  kPartial,
  kReconstructed,
  kCoarse,
  kComplete,
  kGroundTruth,
};

// An ordered list of 3D points. Point order is meaningful (index sets from
// partitioning and sampling refer to positions in this list).
struct PointCloud {
  std::vector<Point3> points;
  CloudTag tag = CloudTag::kNone;

  PointCloud() = default;
  explicit PointCloud(std::vector<Point3> pts, CloudTag t = CloudTag::kNone)
      : points(std::move(pts)), tag(t) {}

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  const Point3& operator[](std::size_t i) const { return points[i]; }
  Point3& operator[](std::size_t i) { return points[i]; }

  bool all_finite() const {
    for (const Point3& p : points) {
      if (!p.finite()) return false;
    }
    return true;
  }
};

// Proper rigid motion p -> R*p + t. Rotation is stored row-major.
struct RigidTransform {
  std::array<double, 9> rotation = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  Point3 translation = {0, 0, 0};

  static RigidTransform identity() { return {}; }

  Point3 apply(const Point3& p) const {
    const auto& r = rotation;
    return {r[0] * p.x + r[1] * p.y + r[2] * p.z + translation.x,
            r[3] * p.x + r[4] * p.y + r[5] * p.z + translation.y,
            r[6] * p.x + r[7] * p.y + r[8] * p.z + translation.z};
  }

  PointCloud apply(const PointCloud& cloud) const {
    PointCloud out;
    out.tag = cloud.tag;
    out.points.reserve(cloud.size());
    for (const Point3& p : cloud.points) out.points.push_back(apply(p));
    return out;
  }

  // Inverse of a proper rigid motion: p -> R^T * (p - t).
  RigidTransform inverse() const {
    RigidTransform inv;
    const auto& r = rotation;
    inv.rotation = {r[0], r[3], r[6], r[1], r[4], r[7], r[2], r[5], r[8]};
    const Point3 t = translation;
    inv.translation = {-(r[0] * t.x + r[3] * t.y + r[6] * t.z),
                       -(r[1] * t.x + r[4] * t.y + r[7] * t.z),
                       -(r[2] * t.x + r[5] * t.y + r[8] * t.z)};
    return inv;
  }

  // this ∘ other: apply `other` first, then this.
  RigidTransform compose(const RigidTransform& other) const {
    RigidTransform out;
    const auto& a = rotation;
    const auto& b = other.rotation;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        out.rotation[3 * i + j] = a[3 * i + 0] * b[0 + j] +
                                  a[3 * i + 1] * b[3 + j] +
                                  a[3 * i + 2] * b[6 + j];
      }
    }
    out.translation = apply(other.translation);
    return out;
  }

  double determinant() const {
    const auto& r = rotation;
    return r[0] * (r[4] * r[8] - r[5] * r[7]) -
           r[1] * (r[3] * r[8] - r[5] * r[6]) +
           r[2] * (r[3] * r[7] - r[4] * r[6]);
  }

  // Max absolute deviation of R^T R from the identity.
  double orthonormality_error() const {
    const auto& r = rotation;
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        double dot = r[i] * r[j] + r[3 + i] * r[3 + j] + r[6 + i] * r[6 + j];
        double want = (i == j) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(dot - want));
      }
    }
    return worst;
  }
};

// Inverse mapping record of normalize_to_unit_sphere: the original cloud is
// recovered as p * radius + center.
struct UnitSphereRecord {
  Point3 center = {0, 0, 0};
  double radius = 1.0;
};

// Centers a cloud at its centroid and scales it so the farthest point sits at
// radius 1. Throws numeric_error("degenerate cloud") when all points coincide.
PointCloud normalize_to_unit_sphere(const PointCloud& cloud,
                                    UnitSphereRecord* record = nullptr);

// Inverse of normalize_to_unit_sphere via the returned record.
PointCloud denormalize(const PointCloud& cloud, const UnitSphereRecord& record);

// Concatenation: all of `a` followed by all of `b`, order preserved.
PointCloud merge(const PointCloud& a, const PointCloud& b);

}  // namespace pcc

#endif  // PCC_GEOMETRY_HPP_
