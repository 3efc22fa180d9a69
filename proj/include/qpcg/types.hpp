// Copyright 2026 The qpcg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPCG_TYPES_HPP
#define QPCG_TYPES_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace qpcg {

// Index type for sparse structures. Unsigned 32-bit; supports nnz up to
// 2^31 - 1.
using index_t = std::uint32_t;

template <typename T>
constexpr T infinity() {
  return std::numeric_limits<T>::infinity();
}

// Thrown when a Krylov solve detects a direction of nonpositive curvature,
// i.e. the operator it was handed is not positive definite.
class NotPositiveDefiniteError : public std::runtime_error {
 public:
  explicit NotPositiveDefiniteError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qpcg

#endif  // QPCG_TYPES_HPP
