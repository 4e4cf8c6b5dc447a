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

#ifndef PCC_TESTS_TEST_UTIL_HPP_
#define PCC_TESTS_TEST_UTIL_HPP_

#include <cstdint>

#include "pcc/geometry.hpp"
#include "pcc/rng.hpp"

namespace pcc::testing {

inline PointCloud random_cloud(Rng& rng, std::size_t n, double lo = -1.0,
                               double hi = 1.0) {
  PointCloud cloud;
  cloud.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    cloud.points.push_back(
        {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)});
  }
  return cloud;
}

inline PointCloud cloud_of(std::initializer_list<Point3> pts) {
  return PointCloud(std::vector<Point3>(pts));
}

}  // namespace pcc::testing

#endif  // PCC_TESTS_TEST_UTIL_HPP_
