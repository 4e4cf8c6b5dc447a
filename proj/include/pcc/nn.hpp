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

#ifndef PCC_NN_HPP_
#define PCC_NN_HPP_

#include <cstddef>
#include <vector>

#include "pcc/rng.hpp"

namespace pcc {

// Dense layer y = W x + b with W stored row-major (out x in). Weights and
// biases initialize from U(-1/sqrt(in), 1/sqrt(in)).
struct Linear {
  std::size_t in = 0;
  std::size_t out = 0;
  std::vector<double> w;
  std::vector<double> b;

  Linear() = default;
  Linear(std::size_t in_dim, std::size_t out_dim)
      : in(in_dim), out(out_dim), w(in_dim * out_dim, 0.0), b(out_dim, 0.0) {}

  void init_uniform(Rng& rng);

  void forward(const double* x, double* y) const;

  // Accumulates parameter gradients into gw/gb (same shapes as w/b) and, when
  // dx is non-null, writes the input gradient.
  void backward(const double* x, const double* dy, double* gw, double* gb,
                double* dx) const;

  std::size_t param_count() const { return w.size() + b.size(); }
};

void relu(const double* x, double* y, std::size_t n);

// dx = dy where the pre-activation was positive, else 0 (subgradient 0 at 0).
void relu_grad(const double* pre, const double* dy, double* dx, std::size_t n);

}  // namespace pcc

#endif  // PCC_NN_HPP_
