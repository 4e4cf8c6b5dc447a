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

#ifndef PCC_ASSIGNMENT_HPP_
#define PCC_ASSIGNMENT_HPP_

#include <cstddef>
#include <vector>

#include "pcc/geometry.hpp"

namespace pcc {

// A bijection between two equal-size point clouds. mapping[i] is the index in
// the second cloud matched to point i of the first; total_cost is the sum of
// squared distances over matched pairs.
struct Assignment {
  std::vector<std::size_t> mapping;
  double total_cost = 0.0;

  double mean_cost() const {
    return mapping.empty() ? 0.0
                           : total_cost / static_cast<double>(mapping.size());
  }
};

// True when mapping is a bijection of size |p| = |q|.
bool is_valid_assignment(const Assignment& a, std::size_t n);

// Sum of squared distances of matched pairs.
double assignment_cost(const PointCloud& p, const PointCloud& q,
                       const std::vector<std::size_t>& mapping);

// Forward auction with epsilon scaling on squared-distance costs. The result
// satisfies mean cost <= (1 + eps_target) * optimal mean cost: scaling stops
// once n*eps is provably within eps_target of the optimum (with a 1e-12 floor
// so zero-cost instances terminate).
Assignment emd_auction(const PointCloud& p, const PointCloud& q,
                       double eps_target);

// Exhaustive permutation search, |p| <= 9.
Assignment emd_exhaustive(const PointCloud& p, const PointCloud& q);

// O(n^3) Hungarian algorithm with potentials, |p| <= 256.
Assignment emd_hungarian(const PointCloud& p, const PointCloud& q);

// Globally optimal bijection: exhaustive search up to n = 9, Hungarian up to
// n = 256, error beyond.
Assignment emd_exact_oracle(const PointCloud& p, const PointCloud& q);

}  // namespace pcc

#endif  // PCC_ASSIGNMENT_HPP_
