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

#ifndef PCC_ERROR_HPP_
#define PCC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pcc {

// Bad or inconsistent input data (file contents, sizes, indices).
// The CLI maps this to exit code 3.
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (degenerate configuration, no convergence).
// The CLI maps this to exit code 4.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pcc

#endif  // PCC_ERROR_HPP_
