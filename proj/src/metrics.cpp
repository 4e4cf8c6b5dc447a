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

#include "pcc/metrics.hpp"

#include <cmath>
#include <cstdint>

#include "pcc/error.hpp"
#include "pcc/kdtree.hpp"
#include "pcc/reduce.hpp"

namespace pcc {
namespace {

// Nearest neighbor of every query point against an indexed cloud. Queries
// are independent, so the loop parallelizes without affecting results.
void nearest_all(const SpatialIndex& index, const PointCloud& queries,
                 std::vector<NearestResult>& out) {
  const auto n = static_cast<std::int64_t>(queries.size());
  out.resize(queries.size());
#pragma omp parallel for schedule(static) if (n > 256)
  for (std::int64_t i = 0; i < n; ++i) {
    out[i] = index.nearest(queries[i]);
  }
}

}  // namespace

void LossWeights::validate() const {
  if (alpha < 0.0 || beta < 0.0 || (alpha == 0.0 && beta == 0.0)) {
    throw data_error("loss weights: need alpha, beta >= 0 and not both zero");
  }
}

double chamfer_distance(const PointCloud& p, const PointCloud& q) {
  if (p.empty() || q.empty()) throw data_error("chamfer: empty cloud");
  const SpatialIndex index_p(p);
  const SpatialIndex index_q(q);

  std::vector<NearestResult> nn_pq, nn_qp;
  nearest_all(index_q, p, nn_pq);
  nearest_all(index_p, q, nn_qp);

  std::vector<double> d_pq(p.size()), d_qp(q.size());
  for (std::size_t i = 0; i < p.size(); ++i) d_pq[i] = nn_pq[i].squared_distance;
  for (std::size_t j = 0; j < q.size(); ++j) d_qp[j] = nn_qp[j].squared_distance;

  return pairwise_sum(d_pq) / static_cast<double>(p.size()) +
         pairwise_sum(d_qp) / static_cast<double>(q.size());
}

double f_score(const PointCloud& pred, const PointCloud& gt, double tau,
               FScoreMode mode) {
  if (pred.empty() || gt.empty()) throw data_error("f_score: empty cloud");
  if (tau <= 0.0) throw data_error("f_score: tau must be > 0");

  const SpatialIndex index_pred(pred);
  const SpatialIndex index_gt(gt);
  std::vector<NearestResult> nn_pg, nn_gp;
  nearest_all(index_gt, pred, nn_pg);
  nearest_all(index_pred, gt, nn_gp);

  const auto within = [&](double d2) {
    return mode == FScoreMode::kSquared ? d2 < tau : std::sqrt(d2) < tau;
  };
  std::size_t hit_pred = 0, hit_gt = 0;
  for (const NearestResult& r : nn_pg) hit_pred += within(r.squared_distance);
  for (const NearestResult& r : nn_gp) hit_gt += within(r.squared_distance);

  const double precision =
      static_cast<double>(hit_pred) / static_cast<double>(pred.size());
  const double recall =
      static_cast<double>(hit_gt) / static_cast<double>(gt.size());
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

double combined_loss(const PointCloud& pred, const PointCloud& gt,
                     const LossWeights& w, double eps_target) {
  w.validate();
  if (pred.size() != gt.size()) throw data_error("size mismatch");
  double loss = 0.0;
  if (w.alpha != 0.0) loss += w.alpha * chamfer_distance(pred, gt);
  if (w.beta != 0.0) {
    loss += w.beta * emd_auction(pred, gt, eps_target).mean_cost();
  }
  return loss;
}

std::vector<Point3> chamfer_gradient(const PointCloud& pred,
                                     const PointCloud& gt) {
  if (pred.empty() || gt.empty()) throw data_error("chamfer: empty cloud");
  const SpatialIndex index_pred(pred);
  const SpatialIndex index_gt(gt);
  std::vector<NearestResult> nn_pg, nn_gp;
  nearest_all(index_gt, pred, nn_pg);
  nearest_all(index_pred, gt, nn_gp);

  const double inv_p = 2.0 / static_cast<double>(pred.size());
  const double inv_g = 2.0 / static_cast<double>(gt.size());

  std::vector<Point3> grad(pred.size());
  const auto n = static_cast<std::int64_t>(pred.size());
#pragma omp parallel for schedule(static) if (n > 256)
  for (std::int64_t i = 0; i < n; ++i) {
    grad[i] = inv_p * (pred[i] - gt[nn_pg[i].index]);
  }
  // Scatter of the coverage term stays serial in index order.
  for (std::size_t j = 0; j < gt.size(); ++j) {
    const std::size_t i = nn_gp[j].index;
    grad[i] += inv_g * (pred[i] - gt[j]);
  }
  return grad;
}

std::vector<Point3> emd_gradient(const PointCloud& pred, const PointCloud& gt,
                                 const Assignment& a) {
  if (pred.size() != gt.size()) throw data_error("size mismatch");
  if (!is_valid_assignment(a, pred.size())) {
    throw data_error("invalid assignment");
  }
  const double inv_p = 2.0 / static_cast<double>(pred.size());
  std::vector<Point3> grad(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    grad[i] = inv_p * (pred[i] - gt[a.mapping[i]]);
  }
  return grad;
}

}  // namespace pcc
