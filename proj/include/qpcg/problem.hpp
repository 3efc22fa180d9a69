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

#ifndef QPCG_PROBLEM_HPP
#define QPCG_PROBLEM_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qpcg/sparse.hpp"
#include "qpcg/types.hpp"

namespace qpcg {

// Quadratic program
//
//   minimize    1/2 x'Px + q'x
//   subject to  l <= Ax <= u
//
// with P stored upper-triangular. P is assumed positive semidefinite; this
// is a documented contract, not something the solver verifies. Bound entries
// may be -inf (in l) or +inf (in u); equality rows are encoded as l_i = u_i.
template <typename T>
struct QpProblem {
  CsrMatrix<T> p_upper;  // n x n, entries on or above the diagonal only
  std::vector<T> q;      // n
  CsrMatrix<T> a;        // m x n
  std::vector<T> l;      // m
  std::vector<T> u;      // m

  index_t num_vars() const { return p_upper.rows; }
  index_t num_constraints() const { return a.rows; }
};

template <typename T>
void validate(const QpProblem<T>& p) {
  validate(p.p_upper);
  validate(p.a);
  if (p.p_upper.rows != p.p_upper.cols) {
    throw std::invalid_argument("problem: P must be square");
  }
  if (p.p_upper.rows == 0) {
    throw std::invalid_argument("problem: at least one variable required");
  }
  for (index_t r = 0; r < p.p_upper.rows; ++r) {
    for (index_t k = p.p_upper.row_ptr[r]; k < p.p_upper.row_ptr[r + 1]; ++k) {
      if (p.p_upper.col_indices[k] < r) {
        throw std::invalid_argument("problem: P has entries below diagonal");
      }
    }
  }
  if (p.a.cols != p.p_upper.cols) {
    throw std::invalid_argument("problem: A column count must equal n");
  }
  if (p.q.size() != p.p_upper.rows) {
    throw std::invalid_argument("problem: q length must equal n");
  }
  if (p.l.size() != p.a.rows || p.u.size() != p.a.rows) {
    throw std::invalid_argument("problem: bound lengths must equal m");
  }
  for (const T& v : p.p_upper.values) {
    if (!std::isfinite(v)) throw std::invalid_argument("problem: P not finite");
  }
  for (const T& v : p.a.values) {
    if (!std::isfinite(v)) throw std::invalid_argument("problem: A not finite");
  }
  for (const T& v : p.q) {
    if (!std::isfinite(v)) throw std::invalid_argument("problem: q not finite");
  }
  for (index_t i = 0; i < p.a.rows; ++i) {
    if (std::isnan(p.l[i]) || std::isnan(p.u[i])) {
      throw std::invalid_argument("problem: bounds contain NaN");
    }
    if (p.l[i] == infinity<T>() || p.u[i] == -infinity<T>()) {
      throw std::invalid_argument("problem: l must be < +inf and u > -inf");
    }
    if (p.l[i] > p.u[i]) {
      throw std::invalid_argument("problem: l must not exceed u");
    }
  }
}

}  // namespace qpcg

#endif  // QPCG_PROBLEM_HPP
