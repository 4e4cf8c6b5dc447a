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

#ifndef PCC_METRICS_HPP_
#define PCC_METRICS_HPP_

#include <vector>

#include "pcc/assignment.hpp"
#include "pcc/geometry.hpp"

namespace pcc {

struct LossWeights {
  double alpha = 1.0;    // chamfer weight
  double beta = 1e-4;    // earth mover weight

  void validate() const;
};

enum class FScoreMode { kSquared, kUnsquared };

// Symmetric chamfer distance:
//   (1/|P|) sum_p min_q ||p-q||^2 + (1/|Q|) sum_q min_p ||q-p||^2.
// Nearest neighbors run over a kd-tree in parallel; per-point distances are
// reduced by index-ordered pairwise summation, so the value is bitwise
// independent of the thread count and exactly symmetric in (P, Q).
double chamfer_distance(const PointCloud& p, const PointCloud& q);

// Harmonic mean of precision and recall under threshold tau. In kSquared
// mode tau bounds the squared nearest-neighbor distance (strictly below); in
// kUnsquared mode it bounds the Euclidean distance. Returns 0 when both
// precision and recall are 0.
double f_score(const PointCloud& pred, const PointCloud& gt, double tau,
               FScoreMode mode = FScoreMode::kSquared);

// alpha * chamfer + beta * mean auction-assignment cost. Requires equal
// sizes (the assignment term is a bijection).
double combined_loss(const PointCloud& pred, const PointCloud& gt,
                     const LossWeights& w, double eps_target);

// Subgradient of chamfer_distance with both nearest-neighbor matchings held
// fixed at the current configuration (ties to the lowest index):
//   d/dp_i = (2/|P|)(p_i - nn_gt(p_i)) + (2/|Q|) sum_{q : nn_pred(q)=i} (p_i - q)
std::vector<Point3> chamfer_gradient(const PointCloud& pred,
                                     const PointCloud& gt);

// Gradient of the mean matched cost with the bijection held fixed:
//   d/dp_i = (2/|P|)(p_i - q_{phi(i)}).
std::vector<Point3> emd_gradient(const PointCloud& pred, const PointCloud& gt,
                                 const Assignment& a);

}  // namespace pcc

#endif  // PCC_METRICS_HPP_
