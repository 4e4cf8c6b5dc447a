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

#include "pcc/nn.hpp"

#include <cmath>

namespace pcc {

void Linear::init_uniform(Rng& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(in));
  for (double& v : w) v = rng.uniform(-bound, bound);
  for (double& v : b) v = rng.uniform(-bound, bound);
}

void Linear::forward(const double* x, double* y) const {
  for (std::size_t o = 0; o < out; ++o) {
    const double* row = &w[o * in];
    double acc = b[o];
    for (std::size_t i = 0; i < in; ++i) acc += row[i] * x[i];
    y[o] = acc;
  }
}

void Linear::backward(const double* x, const double* dy, double* gw,
                      double* gb, double* dx) const {
  for (std::size_t o = 0; o < out; ++o) {
    const double g = dy[o];
    gb[o] += g;
    double* grow = &gw[o * in];
    for (std::size_t i = 0; i < in; ++i) grow[i] += g * x[i];
  }
  if (dx != nullptr) {
    for (std::size_t i = 0; i < in; ++i) dx[i] = 0.0;
    for (std::size_t o = 0; o < out; ++o) {
      const double g = dy[o];
      const double* row = &w[o * in];
      for (std::size_t i = 0; i < in; ++i) dx[i] += g * row[i];
    }
  }
}

void relu(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_grad(const double* pre, const double* dy, double* dx,
               std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dx[i] = pre[i] > 0.0 ? dy[i] : 0.0;
}

}  // namespace pcc
