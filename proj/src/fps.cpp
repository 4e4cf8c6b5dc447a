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

#include "pcc/fps.hpp"

#include <algorithm>

#include "pcc/error.hpp"
#include "pcc/rng.hpp"

namespace pcc {
namespace {

struct Candidate {
  double d2 = -1.0;
  std::size_t index = 0;
};

// Total order: larger distance wins, lowest index on ties. Combining
// per-thread candidates in any order yields the same winner.
inline bool better(const Candidate& a, const Candidate& b) {
  return a.d2 > b.d2 || (a.d2 == b.d2 && a.index < b.index);
}

}  // namespace

std::vector<std::size_t> farthest_point_sample(const PointCloud& cloud,
                                               std::size_t k,
                                               std::size_t seed_index) {
  const std::size_t n = cloud.size();
  if (k < 1 || k > n) throw data_error("fps: k out of range");
  if (seed_index >= n) throw data_error("fps: seed index out of range");

  std::vector<std::size_t> selected;
  selected.reserve(k);
  selected.push_back(seed_index);

  std::vector<char> taken(n, 0);
  taken[seed_index] = 1;
  std::vector<double> min_d2(n);
  const Point3* pts = cloud.points.data();

  const auto n_i = static_cast<std::int64_t>(n);
  const Point3 seed_pt = pts[seed_index];
#pragma omp parallel for schedule(static) if (n_i > 4096)
  for (std::int64_t i = 0; i < n_i; ++i) {
    min_d2[i] = squared_distance(pts[i], seed_pt);
  }

  while (selected.size() < k) {
    Candidate global;
#pragma omp parallel if (n_i > 4096)
    {
      Candidate local;
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < n_i; ++i) {
        if (taken[i]) continue;
        const Candidate c{min_d2[i], static_cast<std::size_t>(i)};
        if (better(c, local)) local = c;
      }
#pragma omp critical
      {
        if (local.d2 >= 0.0 && better(local, global)) global = local;
      }
    }

    const std::size_t chosen = global.index;
    selected.push_back(chosen);
    taken[chosen] = 1;
    const Point3 chosen_pt = pts[chosen];
#pragma omp parallel for schedule(static) if (n_i > 4096)
    for (std::int64_t i = 0; i < n_i; ++i) {
      min_d2[i] = std::min(min_d2[i], squared_distance(pts[i], chosen_pt));
    }
  }
  return selected;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> random_halves(
    const PointCloud& cloud, std::uint64_t rng_seed) {
  const std::size_t n = cloud.size();
  if (n < 2) throw data_error("random_halves: need at least 2 points");

  std::vector<std::size_t> indices(n);
  for (std::size_t i = 0; i < n; ++i) indices[i] = i;
  Rng rng(rng_seed);
  rng.shuffle(indices);

  const std::size_t half = (n + 1) / 2;
  std::vector<std::size_t> a(indices.begin(), indices.begin() + half);
  std::vector<std::size_t> b(indices.begin() + half, indices.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return {std::move(a), std::move(b)};
}

}  // namespace pcc
