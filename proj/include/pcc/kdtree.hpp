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

#ifndef PCC_KDTREE_HPP_
#define PCC_KDTREE_HPP_

#include <cstdint>
#include <vector>

#include "pcc/geometry.hpp"

namespace pcc {

struct NearestResult {
  std::size_t index = 0;
  double squared_distance = 0.0;
};

// Immutable kd-tree over a point cloud (axis-aligned binary space partition,
// median split on the widest axis). nearest() returns exactly the brute-force
// answer: the minimum squared distance, with ties broken by the lowest point
// index. Queries are const and safe to run concurrently; construction is
// single-threaded.
class SpatialIndex {
 public:
  explicit SpatialIndex(const PointCloud& cloud);

  NearestResult nearest(const Point3& query) const;

  std::size_t size() const { return points_.size(); }
  const Point3& point(std::size_t i) const { return points_[i]; }

 private:
  struct Node {
    // Interior: children indices and the split plane. Leaf: left == -1 and
    // [begin, end) indexes into order_.
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::int32_t begin = 0;
    std::int32_t end = 0;
    double split = 0.0;
    std::int32_t axis = 0;
  };

  std::int32_t build(std::int32_t begin, std::int32_t end);
  void search(std::int32_t node_id, const Point3& query,
              NearestResult& best) const;

  std::vector<Point3> points_;
  std::vector<std::uint32_t> order_;
  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
};

}  // namespace pcc

#endif  // PCC_KDTREE_HPP_
