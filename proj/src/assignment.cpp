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

#include "pcc/assignment.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "pcc/error.hpp"

namespace pcc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEpsFloor = 1e-12;
constexpr double kEpsScaleFactor = 4.0;

void check_sizes(const PointCloud& p, const PointCloud& q) {
  if (p.empty() || q.empty()) throw data_error("assignment: empty cloud");
  if (p.size() != q.size()) throw data_error("size mismatch");
}

// Row-major squared-distance cost matrix.
std::vector<double> cost_matrix(const PointCloud& p, const PointCloud& q) {
  const std::int64_t n = static_cast<std::int64_t>(p.size());
  std::vector<double> cost(static_cast<std::size_t>(n) * n);
#pragma omp parallel for schedule(static) if (n > 128)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      cost[i * n + j] = squared_distance(p[i], q[j]);
    }
  }
  return cost;
}

// One forward-auction pass at a fixed epsilon. Prices are kept across calls
// (epsilon scaling); the assignment restarts from scratch.
void auction_phase(const std::vector<double>& cost, std::size_t n, double eps,
                   std::vector<double>& price,
                   std::vector<std::size_t>& person_to_object) {
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> object_to_person(n, kNone);
  person_to_object.assign(n, kNone);

  std::vector<std::size_t> stack(n);
  for (std::size_t i = 0; i < n; ++i) stack[i] = n - 1 - i;

  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();

    // Best and second-best value of object j to person i (value = -cost - price).
    const double* row = &cost[i * n];
    std::size_t best_j = 0;
    double best_v = -kInf;
    double second_v = -kInf;
    for (std::size_t j = 0; j < n; ++j) {
      const double v = -row[j] - price[j];
      if (v > best_v) {
        second_v = best_v;
        best_v = v;
        best_j = j;
      } else if (v > second_v) {
        second_v = v;
      }
    }

    price[best_j] += best_v - second_v + eps;
    const std::size_t previous = object_to_person[best_j];
    if (previous != kNone) {
      person_to_object[previous] = kNone;
      stack.push_back(previous);
    }
    object_to_person[best_j] = i;
    person_to_object[i] = best_j;
  }
}

}  // namespace

bool is_valid_assignment(const Assignment& a, std::size_t n) {
  if (a.mapping.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t j : a.mapping) {
    if (j >= n || seen[j]) return false;
    seen[j] = 1;
  }
  return true;
}

double assignment_cost(const PointCloud& p, const PointCloud& q,
                       const std::vector<std::size_t>& mapping) {
  double total = 0.0;
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    total += squared_distance(p[i], q[mapping[i]]);
  }
  return total;
}

Assignment emd_auction(const PointCloud& p, const PointCloud& q,
                       double eps_target) {
  check_sizes(p, q);
  if (eps_target <= 0.0) throw data_error("auction: eps_target must be > 0");
  const std::size_t n = p.size();

  Assignment out;
  if (n == 1) {
    out.mapping = {0};
    out.total_cost = squared_distance(p[0], q[0]);
    return out;
  }

  const std::vector<double> cost = cost_matrix(p, q);
  const auto [lo_it, hi_it] = std::minmax_element(cost.begin(), cost.end());
  const double spread = *hi_it - *lo_it;

  double eps = std::max(spread / 2.0, kEpsFloor);
  std::vector<double> price(n, 0.0);
  std::vector<std::size_t> mapping;

  while (true) {
    auction_phase(cost, n, eps, price, mapping);
    const double total = assignment_cost(p, q, mapping);
    // eps-optimality gives total <= opt + n*eps, so opt >= total - n*eps.
    const double n_eps = static_cast<double>(n) * eps;
    const double opt_lower_bound = total - n_eps;
    if (n_eps <= eps_target * opt_lower_bound || eps <= kEpsFloor) {
      out.mapping = std::move(mapping);
      out.total_cost = total;
      return out;
    }
    eps /= kEpsScaleFactor;
  }
}

Assignment emd_exhaustive(const PointCloud& p, const PointCloud& q) {
  check_sizes(p, q);
  const std::size_t n = p.size();
  if (n > 9) throw data_error("exhaustive assignment: n > 9");

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Assignment best;
  best.total_cost = kInf;
  do {
    const double total = assignment_cost(p, q, perm);
    if (total < best.total_cost) {
      best.total_cost = total;
      best.mapping = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Assignment emd_hungarian(const PointCloud& p, const PointCloud& q) {
  check_sizes(p, q);
  const std::size_t n = p.size();
  if (n > 256) throw data_error("hungarian assignment: n > 256");
  const std::vector<double> cost = cost_matrix(p, q);

  // Shortest-augmenting-path Hungarian with row/column potentials,
  // 1-indexed with column 0 as the virtual start.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0);  // match[j] = row assigned to col j
  std::vector<std::size_t> way(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> min_v(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      std::size_t j1 = 0;
      double delta = kInf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < min_v[j]) {
          min_v[j] = cur;
          way[j] = j0;
        }
        if (min_v[j] < delta) {
          delta = min_v[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          min_v[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out;
  out.mapping.resize(n);
  for (std::size_t j = 1; j <= n; ++j) out.mapping[match[j] - 1] = j - 1;
  out.total_cost = assignment_cost(p, q, out.mapping);
  return out;
}

Assignment emd_exact_oracle(const PointCloud& p, const PointCloud& q) {
  check_sizes(p, q);
  if (p.size() <= 9) return emd_exhaustive(p, q);
  if (p.size() <= 256) return emd_hungarian(p, q);
  throw data_error("exact assignment oracle: n > 256");
}

}  // namespace pcc
