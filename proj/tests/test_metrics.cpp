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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "pcc/assignment.hpp"
#include "pcc/error.hpp"
#include "pcc/kdtree.hpp"
#include "pcc/metrics.hpp"
#include "pcc/rng.hpp"
#include "pcc/serial.hpp"
#include "test_util.hpp"

using namespace pcc;
using pcc::testing::cloud_of;
using pcc::testing::random_cloud;

namespace {

double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-6});
}

const PointCloud kTwoP = cloud_of({{0, 0, 0}, {1, 0, 0}});
const PointCloud kTwoQ = cloud_of({{0, 0, 0}, {0, 1, 0}});

}  // namespace

TEST_CASE("chamfer: identity, hand-computed pairs") {
  Rng rng(1);
  const PointCloud x = random_cloud(rng, 50);
  CHECK(chamfer_distance(x, x) == 0.0);

  CHECK(chamfer_distance(kTwoP, kTwoQ) == doctest::Approx(1.0));
  CHECK(chamfer_distance(cloud_of({{0, 0, 0}}), cloud_of({{1, 1, 1}})) ==
        doctest::Approx(6.0));
  CHECK_THROWS_AS(chamfer_distance(PointCloud{}, x), data_error);
}

TEST_CASE("chamfer: exact symmetry, non-negativity, brute-force agreement") {
  Rng rng(2);
  for (int trial = 0; trial < 25; ++trial) {
    const PointCloud p = random_cloud(rng, 1 + rng.below(512));
    const PointCloud q = random_cloud(rng, 1 + rng.below(512));
    const double pq = chamfer_distance(p, q);
    const double qp = chamfer_distance(q, p);
    CHECK(pq == qp);
    CHECK(pq >= 0.0);
    CHECK(std::abs(pq - serial::chamfer_distance(p, q)) < 1e-12);
  }
}

TEST_CASE("auction: identical clouds give the zero-cost assignment") {
  Rng rng(3);
  const PointCloud x = random_cloud(rng, 32);
  const Assignment a = emd_auction(x, x, 0.01);
  CHECK(is_valid_assignment(a, x.size()));
  CHECK(a.total_cost == 0.0);
}

TEST_CASE("auction: two-point instance and size mismatch") {
  // Both bijections cost 2.0 total, so the mean matched cost is 1.0.
  const Assignment a = emd_auction(kTwoP, kTwoQ, 0.01);
  CHECK(a.mean_cost() == doctest::Approx(1.0));
  CHECK(a.total_cost == doctest::Approx(2.0));

  Rng rng(4);
  CHECK_THROWS_WITH_AS(
      emd_auction(random_cloud(rng, 3), random_cloud(rng, 4), 0.01),
      "size mismatch", data_error);
}

TEST_CASE("exact oracle: forced single pairing and two-point value") {
  const Assignment one =
      emd_exact_oracle(cloud_of({{0, 0, 0}}), cloud_of({{0.5, 0, 0}}));
  CHECK(one.mapping == std::vector<std::size_t>{0});
  CHECK(one.total_cost == doctest::Approx(0.25));

  CHECK(emd_exact_oracle(kTwoP, kTwoQ).mean_cost() == doctest::Approx(1.0));
}

TEST_CASE("hungarian equals exhaustive exactly for small n") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(8);  // 2..9
    const PointCloud p = random_cloud(rng, n);
    const PointCloud q = random_cloud(rng, n);
    const Assignment ex = emd_exhaustive(p, q);
    const Assignment hu = emd_hungarian(p, q);
    CHECK(is_valid_assignment(hu, n));
    CHECK(rel_err(ex.total_cost, hu.total_cost) < 1e-12);
  }
}

TEST_CASE("auction cost within (1+eps) of the exhaustive optimum") {
  Rng rng(6);
  const double eps = 0.01;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.below(8);
    const PointCloud p = random_cloud(rng, n);
    const PointCloud q = random_cloud(rng, n);
    const Assignment opt = emd_exhaustive(p, q);
    const Assignment got = emd_auction(p, q, eps);
    CHECK(is_valid_assignment(got, n));
    CHECK(got.total_cost >= opt.total_cost - 1e-12);
    CHECK(got.total_cost <= (1.0 + eps) * opt.total_cost + 1e-12);
  }
}

TEST_CASE("any bijection cost dominates the one-sided chamfer term") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.below(64);
    const PointCloud p = random_cloud(rng, n);
    const PointCloud q = random_cloud(rng, n);
    const Assignment a = emd_auction(p, q, 0.01);

    const SpatialIndex index_q(q);
    double nn_sum = 0.0;
    for (const Point3& pt : p.points) {
      nn_sum += index_q.nearest(pt).squared_distance;
    }
    CHECK(a.mean_cost() >= nn_sum / static_cast<double>(n) - 1e-12);
  }
}

TEST_CASE("f_score: identity, hand case, empty match, monotone in tau") {
  Rng rng(8);
  const PointCloud x = random_cloud(rng, 40);
  CHECK(f_score(x, x, 1e-3) == doctest::Approx(1.0));

  const PointCloud pred = cloud_of({{0, 0, 0}, {10, 0, 0}});
  const PointCloud gt = cloud_of({{0, 0, 0}});
  CHECK(f_score(pred, gt, 0.25) == doctest::Approx(2.0 / 3.0));

  const PointCloud far_pred = cloud_of({{100, 0, 0}});
  CHECK(f_score(far_pred, gt, 0.25) == 0.0);

  const PointCloud p = random_cloud(rng, 64);
  const PointCloud q = random_cloud(rng, 64);
  double prev = 0.0;
  for (double tau : {1e-4, 1e-3, 1e-2, 1e-1, 1.0, 10.0}) {
    const double f = f_score(p, q, tau);
    CHECK(f >= prev - 1e-15);
    prev = f;
  }

  // Unsquared mode thresholds the Euclidean distance instead: at tau = 0.3
  // the squared distance 0.16 passes but the distance 0.4 does not.
  const PointCloud off = cloud_of({{0.4, 0, 0}});
  CHECK(f_score(off, gt, 0.3, FScoreMode::kSquared) == doctest::Approx(1.0));
  CHECK(f_score(off, gt, 0.3, FScoreMode::kUnsquared) == 0.0);
}

TEST_CASE("combined loss: identity, weighted sum, pure emd") {
  Rng rng(9);
  const PointCloud x = random_cloud(rng, 16);
  CHECK(combined_loss(x, x, LossWeights{1.0, 1e-4}, 0.01) == 0.0);

  // CD = 1.0 and mean matched cost = 1.0 on the two-point fixture.
  const double loss = combined_loss(kTwoP, kTwoQ, LossWeights{1.0, 1e-4}, 0.01);
  CHECK(loss == doctest::Approx(1.0001));

  const double pure_emd = combined_loss(kTwoP, kTwoQ, LossWeights{0.0, 1.0}, 0.01);
  CHECK(pure_emd == doctest::Approx(1.0));

  CHECK_THROWS_AS(combined_loss(random_cloud(rng, 3), random_cloud(rng, 4),
                                LossWeights{1.0, 1e-4}, 0.01),
                  data_error);
  CHECK_THROWS_AS(combined_loss(x, x, LossWeights{0.0, 0.0}, 0.01), data_error);
}

TEST_CASE("chamfer gradient: stationary identity and single-pair value") {
  // Distinct points matched to themselves: gradient is exactly zero.
  const PointCloud x = cloud_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  for (const Point3& g : chamfer_gradient(x, x)) {
    CHECK(g == Point3{0, 0, 0});
  }

  const auto g =
      chamfer_gradient(cloud_of({{1, 0, 0}}), cloud_of({{0, 0, 0}}));
  CHECK(g[0].x == doctest::Approx(4.0));
  CHECK(g[0].y == doctest::Approx(0.0));
}

TEST_CASE("chamfer gradient matches central finite differences") {
  Rng rng(10);
  const double h = 1e-5;
  for (int trial = 0; trial < 5; ++trial) {
    PointCloud pred = random_cloud(rng, 16);
    const PointCloud gt = random_cloud(rng, 16);
    const auto grad = chamfer_gradient(pred, gt);
    for (std::size_t i = 0; i < pred.size(); ++i) {
      for (int axis = 0; axis < 3; ++axis) {
        double* coord = axis == 0 ? &pred[i].x : axis == 1 ? &pred[i].y
                                                           : &pred[i].z;
        const double saved = *coord;
        *coord = saved + h;
        const double up = chamfer_distance(pred, gt);
        *coord = saved - h;
        const double down = chamfer_distance(pred, gt);
        *coord = saved;
        const double fd = (up - down) / (2.0 * h);
        const double an = axis == 0 ? grad[i].x : axis == 1 ? grad[i].y
                                                            : grad[i].z;
        CHECK(rel_err(an, fd) < 1e-4);
      }
    }
  }
}

TEST_CASE("emd gradient: identity, single pair, frozen finite differences") {
  const PointCloud x = cloud_of({{0, 0, 0}, {1, 0, 0}});
  Assignment ident;
  ident.mapping = {0, 1};
  ident.total_cost = 0.0;
  for (const Point3& g : emd_gradient(x, x, ident)) {
    CHECK(g == Point3{0, 0, 0});
  }

  const PointCloud single_p = cloud_of({{1, 0, 0}});
  const PointCloud single_q = cloud_of({{0, 0, 0}});
  Assignment one;
  one.mapping = {0};
  CHECK(emd_gradient(single_p, single_q, one)[0].x == doctest::Approx(2.0));

  // Finite differences of the mean matched cost with the bijection frozen.
  Rng rng(11);
  PointCloud pred = random_cloud(rng, 12);
  const PointCloud gt = random_cloud(rng, 12);
  const Assignment a = emd_auction(pred, gt, 0.01);
  const auto grad = emd_gradient(pred, gt, a);
  const auto frozen_cost = [&]() {
    return assignment_cost(pred, gt, a.mapping) /
           static_cast<double>(pred.size());
  };
  const double h = 1e-5;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double saved = pred[i].y;
    pred[i].y = saved + h;
    const double up = frozen_cost();
    pred[i].y = saved - h;
    const double down = frozen_cost();
    pred[i].y = saved;
    CHECK(rel_err(grad[i].y, (up - down) / (2.0 * h)) < 1e-4);
  }

  Assignment bad;
  bad.mapping = {0, 0};
  CHECK_THROWS_WITH_AS(emd_gradient(x, x, bad), "invalid assignment",
                       data_error);
}
