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

#ifndef PCC_SERIAL_HPP_
#define PCC_SERIAL_HPP_

#include <vector>

#include "pcc/geometry.hpp"
#include "pcc/kdtree.hpp"

// Single-threaded brute-force reference implementations. These are the
// oracles the tests and benchmarks compare the indexed / OpenMP kernels
// against; keep them obviously correct rather than fast.
namespace pcc::serial {

// Exhaustive scan, ties broken by lowest index.
NearestResult nearest(const std::vector<Point3>& points, const Point3& query);

// Symmetric mean-of-squared-nearest-distance via the double loop.
double chamfer_distance(const PointCloud& p, const PointCloud& q);

// Plain greedy max-min sampling, ties broken by lowest index.
std::vector<std::size_t> farthest_point_sample(const PointCloud& cloud,
                                               std::size_t k,
                                               std::size_t seed_index);

}  // namespace pcc::serial

#endif  // PCC_SERIAL_HPP_
