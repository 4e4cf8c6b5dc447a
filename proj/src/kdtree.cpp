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

#include "pcc/kdtree.hpp"

#include <algorithm>
#include <limits>

#include "pcc/error.hpp"

namespace pcc {
namespace {

constexpr std::int32_t kLeafSize = 8;

inline double coord(const Point3& p, std::int32_t axis) {
  return axis == 0 ? p.x : (axis == 1 ? p.y : p.z);
}

}  // namespace

SpatialIndex::SpatialIndex(const PointCloud& cloud) : points_(cloud.points) {
  if (points_.empty()) throw data_error("spatial index: empty cloud");
  order_.resize(points_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    order_[i] = static_cast<std::uint32_t>(i);
  }
  nodes_.reserve(2 * points_.size() / kLeafSize + 2);
  root_ = build(0, static_cast<std::int32_t>(points_.size()));
}

std::int32_t SpatialIndex::build(std::int32_t begin, std::int32_t end) {
  Node node;
  node.begin = begin;
  node.end = end;
  const std::int32_t id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(node);

  if (end - begin <= kLeafSize) return id;

  Point3 lo = points_[order_[begin]];
  Point3 hi = lo;
  for (std::int32_t i = begin + 1; i < end; ++i) {
    const Point3& p = points_[order_[i]];
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  const Point3 extent = hi - lo;
  std::int32_t axis = 0;
  if (extent.y > extent.x) axis = 1;
  if (extent.z > coord(extent, axis)) axis = 2;

  const std::int32_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid,
                   order_.begin() + end,
                   [&](std::uint32_t a, std::uint32_t b) {
                     return coord(points_[a], axis) < coord(points_[b], axis);
                   });
  const double split = coord(points_[order_[mid]], axis);

  const std::int32_t left = build(begin, mid);
  const std::int32_t right = build(mid, end);
  nodes_[id].left = left;
  nodes_[id].right = right;
  nodes_[id].axis = axis;
  nodes_[id].split = split;
  return id;
}

NearestResult SpatialIndex::nearest(const Point3& query) const {
  NearestResult best;
  best.index = points_.size();
  best.squared_distance = std::numeric_limits<double>::infinity();
  search(root_, query, best);
  return best;
}

void SpatialIndex::search(std::int32_t node_id, const Point3& query,
                          NearestResult& best) const {
  const Node& node = nodes_[node_id];
  if (node.left < 0) {
    for (std::int32_t i = node.begin; i < node.end; ++i) {
      const std::size_t idx = order_[i];
      const double d2 = squared_distance(points_[idx], query);
      if (d2 < best.squared_distance ||
          (d2 == best.squared_distance && idx < best.index)) {
        best.squared_distance = d2;
        best.index = idx;
      }
    }
    return;
  }

  const double diff = coord(query, node.axis) - node.split;
  const std::int32_t near = diff < 0.0 ? node.left : node.right;
  const std::int32_t far = diff < 0.0 ? node.right : node.left;
  search(near, query, best);
  // Descend on equality too: an equal-distance point with a lower index may
  // live on the far side.
  if (diff * diff <= best.squared_distance) search(far, query, best);
}

}  // namespace pcc
