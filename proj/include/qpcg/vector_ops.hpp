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

#ifndef QPCG_VECTOR_OPS_HPP
#define QPCG_VECTOR_OPS_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace qpcg {

template <typename T>
T inf_norm(const std::vector<T>& v) {
  T m = T(0);
  for (const T& x : v) {
    T a = std::abs(x);
    if (a > m) m = a;
  }
  return m;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  T s = T(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// y += alpha * x
template <typename T>
void axpy(T alpha, const std::vector<T>& x, std::vector<T>& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

template <typename T>
void scale_inplace(std::vector<T>& v, T alpha) {
  for (T& x : v) x *= alpha;
}

// out = a .* b
template <typename T>
std::vector<T> ew_product(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

template <typename T>
void ew_product_inplace(std::vector<T>& a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
}

template <typename T>
T inf_norm_scaled(const std::vector<T>& v, const std::vector<T>& diag) {
  T m = T(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    T a = std::abs(v[i] * diag[i]);
    if (a > m) m = a;
  }
  return m;
}

template <typename T>
bool all_finite(const std::vector<T>& v) {
  for (const T& x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace qpcg

#endif  // QPCG_VECTOR_OPS_HPP
