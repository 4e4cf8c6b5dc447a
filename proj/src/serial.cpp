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

#include "pcc/serial.hpp"

#include <limits>

#include "pcc/error.hpp"

namespace pcc::serial {

NearestResult nearest(const std::vector<Point3>& points, const Point3& query) {
  NearestResult best;
  best.index = points.size();
  best.squared_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d2 = squared_distance(points[i], query);
    if (d2 < best.squared_distance) {
      best.squared_distance = d2;
      best.index = i;
    }
  }
  return best;
}

double chamfer_distance(const PointCloud& p, const PointCloud& q) {
  if (p.empty() || q.empty()) throw data_error("chamfer: empty cloud");
  double sum_pq = 0.0;
  for (const Point3& a : p.points) {
    sum_pq += nearest(q.points, a).squared_distance;
  }
  double sum_qp = 0.0;
  for (const Point3& b : q.points) {
    sum_qp += nearest(p.points, b).squared_distance;
  }
  return sum_pq / static_cast<double>(p.size()) +
         sum_qp / static_cast<double>(q.size());
}

std::vector<std::size_t> farthest_point_sample(const PointCloud& cloud,
                                               std::size_t k,
                                               std::size_t seed_index) {
  const std::size_t n = cloud.size();
  if (k < 1 || k > n) throw data_error("fps: k out of range");
  if (seed_index >= n) throw data_error("fps: seed index out of range");

  std::vector<std::size_t> selected;
  selected.reserve(k);
  selected.push_back(seed_index);

  std::vector<bool> taken(n, false);
  taken[seed_index] = true;
  std::vector<double> min_d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    min_d2[i] = squared_distance(cloud[i], cloud[seed_index]);
  }

  while (selected.size() < k) {
    std::size_t best = n;
    double best_d2 = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!taken[i] && min_d2[i] > best_d2) {
        best_d2 = min_d2[i];
        best = i;
      }
    }
    selected.push_back(best);
    taken[best] = true;
    for (std::size_t i = 0; i < n; ++i) {
      min_d2[i] = std::min(min_d2[i], squared_distance(cloud[i], cloud[best]));
    }
  }
  return selected;
}

}  // namespace pcc::serial
