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

#include "pcc/partfilter.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "pcc/error.hpp"
#include "pcc/fps.hpp"
#include "pcc/kdtree.hpp"
#include "pcc/reduce.hpp"

namespace pcc {
namespace {

// Squared distance of every cloud point to its nearest partial point,
// in cloud index order.
std::vector<double> distances_to(const PointCloud& cloud,
                                 const PointCloud& partial) {
  if (cloud.empty() || partial.empty()) {
    throw data_error("partition: empty cloud");
  }
  const SpatialIndex index(partial);
  std::vector<double> d2(cloud.size());
  const auto n = static_cast<std::int64_t>(cloud.size());
#pragma omp parallel for schedule(static) if (n > 256)
  for (std::int64_t i = 0; i < n; ++i) {
    d2[i] = index.nearest(cloud[i]).squared_distance;
  }
  return d2;
}

}  // namespace

double estimate_density_threshold(const PointCloud& coarse,
                                  std::uint64_t rng_seed) {
  if (coarse.size() < 2) {
    throw data_error("density threshold: need at least 2 points");
  }
  const auto [half_a, half_b] = random_halves(coarse, rng_seed);

  PointCloud a, b;
  a.points.reserve(half_a.size());
  b.points.reserve(half_b.size());
  for (std::size_t i : half_a) a.points.push_back(coarse[i]);
  for (std::size_t i : half_b) b.points.push_back(coarse[i]);

  const SpatialIndex index_a(a);
  const SpatialIndex index_b(b);

  std::vector<double> d2(coarse.size());
  const auto na = static_cast<std::int64_t>(a.size());
  const auto nb = static_cast<std::int64_t>(b.size());
#pragma omp parallel for schedule(static) if (na > 256)
  for (std::int64_t i = 0; i < na; ++i) {
    d2[i] = index_b.nearest(a[i]).squared_distance;
  }
#pragma omp parallel for schedule(static) if (nb > 256)
  for (std::int64_t i = 0; i < nb; ++i) {
    d2[half_a.size() + i] = index_a.nearest(b[i]).squared_distance;
  }
  return pairwise_sum(d2) / static_cast<double>(coarse.size());
}

PointCloud build_coarse(const PointCloud& merged, std::size_t n_c,
                        std::size_t seed_index) {
  if (n_c > merged.size()) {
    throw data_error("build_coarse: n_c exceeds merged size");
  }
  const auto picks = farthest_point_sample(merged, n_c, seed_index);
  PointCloud out;
  out.tag = CloudTag::kCoarse;
  out.points.reserve(n_c);
  for (std::size_t i : picks) out.points.push_back(merged[i]);
  return out;
}

Partition partition_fine_coarse(const PointCloud& coarse,
                                const PointCloud& partial, double d_thr) {
  if (d_thr < 0.0) throw data_error("partition: d_thr must be >= 0");
  const std::vector<double> d2 = distances_to(coarse, partial);

  Partition part;
  part.d_thr = d_thr;
  for (std::size_t i = 0; i < d2.size(); ++i) {
    if (d2[i] < d_thr) {
      part.fine.push_back(i);
    } else {
      part.coarse.push_back(i);
    }
  }
  return part;
}

Partition partition_force_coarse(const PointCloud& coarse,
                                 const PointCloud& partial, std::size_t n_m) {
  if (n_m > coarse.size()) {
    throw data_error("partition: forced coarse count exceeds cloud size");
  }
  const std::vector<double> d2 = distances_to(coarse, partial);

  std::vector<std::size_t> order(coarse.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d2[a] > d2[b];  // stable: equal distances keep index order
  });

  Partition part;
  part.coarse.assign(order.begin(), order.begin() + n_m);
  part.fine.assign(order.begin() + n_m, order.end());
  std::sort(part.coarse.begin(), part.coarse.end());
  std::sort(part.fine.begin(), part.fine.end());
  part.d_thr = n_m == 0 ? 0.0 : d2[order[n_m - 1]];
  return part;
}

}  // namespace pcc
