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

#include "pcc/geometry.hpp"

#include "pcc/error.hpp"

namespace pcc {

PointCloud normalize_to_unit_sphere(const PointCloud& cloud,
                                    UnitSphereRecord* record) {
  if (cloud.empty()) throw data_error("normalize: empty cloud");

  Point3 centroid{0, 0, 0};
  for (const Point3& p : cloud.points) centroid += p;
  centroid = centroid / static_cast<double>(cloud.size());

  double max_r2 = 0.0;
  for (const Point3& p : cloud.points) {
    max_r2 = std::max(max_r2, squared_distance(p, centroid));
  }
  if (max_r2 == 0.0) throw numeric_error("degenerate cloud");
  const double radius = std::sqrt(max_r2);

  PointCloud out;
  out.tag = cloud.tag;
  out.points.reserve(cloud.size());
  for (const Point3& p : cloud.points) out.points.push_back((p - centroid) / radius);

  if (record != nullptr) {
    record->center = centroid;
    record->radius = radius;
  }
  return out;
}

PointCloud denormalize(const PointCloud& cloud, const UnitSphereRecord& record) {
  PointCloud out;
  out.tag = cloud.tag;
  out.points.reserve(cloud.size());
  for (const Point3& p : cloud.points) {
    out.points.push_back(p * record.radius + record.center);
  }
  return out;
}

PointCloud merge(const PointCloud& a, const PointCloud& b) {
  PointCloud out;
  out.points.reserve(a.size() + b.size());
  out.points.insert(out.points.end(), a.points.begin(), a.points.end());
  out.points.insert(out.points.end(), b.points.begin(), b.points.end());
  return out;
}

}  // namespace pcc
