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

// Modified Ruiz equilibration. Produces a cost scaling c > 0 and positive
// diagonals D (variables) and E (constraints) such that the scaled data
//
//   P_s = c D P D,  q_s = c D q,  A_s = E A D,  l_s = E l,  u_s = E u
//
// has the column infinity norms of the stacked matrix [P_s A_s'; A_s 0]
// driven toward one. Each pass rescales in place by delta_i = 1/sqrt(|M_i|)
// and then applies the cost scaling gamma = 1/max(mean col norms of P_s,
// |q_s|_inf); the loop exits when |1 - delta|_inf falls below the tolerance
// or the pass cap is hit.
//
// Scaled-space iterates relate to original ones as x = D x_s, z = E^-1 z_s,
// y = (1/c) E y_s.

#ifndef QPCG_SCALING_HPP
#define QPCG_SCALING_HPP

#include <cmath>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "qpcg/problem.hpp"
#include "qpcg/sparse.hpp"
#include "qpcg/types.hpp"
#include "qpcg/vector_ops.hpp"

namespace qpcg {

template <typename T>
struct ScalingData {
  std::vector<T> d;      // diagonal of D, size n, strictly positive
  std::vector<T> e;      // diagonal of E, size m, strictly positive
  T c = T(1);            // cost scaling, strictly positive
  std::vector<T> d_inv;  // precomputed reciprocals
  std::vector<T> e_inv;
  T c_inv = T(1);

  static ScalingData identity(index_t n, index_t m) {
    ScalingData s;
    s.d.assign(n, T(1));
    s.e.assign(m, T(1));
    s.d_inv.assign(n, T(1));
    s.e_inv.assign(m, T(1));
    return s;
  }
};

// The equilibrated problem. P is held full symmetric (not upper-triangular):
// the stacked-matrix column norms and all downstream products need the full
// pattern. The transpose of A rides along so nothing downstream has to
// re-transpose.
template <typename T>
struct ScaledProblem {
  CsrMatrix<T> p_full;  // c D P D, full symmetric
  std::vector<T> q;     // c D q
  CsrMatrix<T> a;       // E A D
  CsrMatrix<T> a_t;     // transpose of a
  std::vector<T> l;     // E l
  std::vector<T> u;     // E u
  ScalingData<T> scaling;
  index_t passes_used = 0;
  T final_delta_deviation = T(0);  // |1 - delta|_inf at exit
};

namespace detail {

template <typename T>
std::vector<T> reciprocal(const std::vector<T>& v) {
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = T(1) / v[i];
  return out;
}

}  // namespace detail

// Equilibrates (p_full, q, a, l, u); p_full must already be full symmetric.
// Empty columns of the stacked matrix get delta = 1 and are left unscaled.
template <typename T>
ScaledProblem<T> ruiz_equilibrate(const CsrMatrix<T>& p_full,
                                  const std::vector<T>& q,
                                  const CsrMatrix<T>& a,
                                  const std::vector<T>& l,
                                  const std::vector<T>& u, T eps_equil,
                                  index_t max_passes) {
  if (!(eps_equil > T(0))) {
    throw std::invalid_argument("ruiz: eps_equil must be positive");
  }
  if (max_passes < 1) {
    throw std::invalid_argument("ruiz: max_passes must be at least 1");
  }
  if (!all_finite(p_full.values) || !all_finite(q) || !all_finite(a.values)) {
    throw std::invalid_argument("ruiz: data must be finite");
  }
  const index_t n = p_full.rows;
  const index_t m = a.rows;

  ScaledProblem<T> sp;
  sp.p_full = p_full;
  sp.q = q;
  sp.a = a;
  sp.a_t = transpose_csr(a);
  sp.scaling = ScalingData<T>::identity(n, m);

  const RowIndexCache cache_p = build_row_index_cache(sp.p_full);
  const RowIndexCache cache_a = build_row_index_cache(sp.a);
  const RowIndexCache cache_at = build_row_index_cache(sp.a_t);

  std::vector<T> delta_x(n, T(0));  // variable block of delta
  std::vector<T> delta_z(m, T(0));  // constraint block
  T deviation = T(1);               // |1 - delta|_inf, delta starts at 0

  index_t pass = 0;
  while (pass < max_passes && deviation > eps_equil) {
    ++pass;
    // Column norms of the stacked matrix. P is symmetric so its column
    // norms are its row norms; column norms of A are row norms of A'.
    const std::vector<T> p_norms = row_inf_norms(sp.p_full);
    const std::vector<T> at_norms = row_inf_norms(sp.a_t);
    const std::vector<T> a_norms = row_inf_norms(sp.a);
    for (index_t i = 0; i < n; ++i) {
      const T col_norm = std::max(p_norms[i], at_norms[i]);
      delta_x[i] = col_norm > T(0) ? T(1) / std::sqrt(col_norm) : T(1);
    }
    for (index_t j = 0; j < m; ++j) {
      delta_z[j] = a_norms[j] > T(0) ? T(1) / std::sqrt(a_norms[j]) : T(1);
    }

    ew_product_inplace(sp.scaling.d, delta_x);
    ew_product_inplace(sp.scaling.e, delta_z);

    scale_rows_inplace(sp.p_full, cache_p, delta_x);
    scale_columns_inplace(sp.p_full, delta_x);
    ew_product_inplace(sp.q, delta_x);
    scale_rows_inplace(sp.a, cache_a, delta_z);
    scale_columns_inplace(sp.a, delta_x);
    scale_rows_inplace(sp.a_t, cache_at, delta_x);
    scale_columns_inplace(sp.a_t, delta_z);

    // Cost scaling. Zero columns of P contribute zero to the mean; if both
    // terms vanish (P = 0 and q = 0) gamma stays 1.
    const std::vector<T> p_col_norms = row_inf_norms(sp.p_full);
    T mean_p = T(0);
    for (const T& v : p_col_norms) mean_p += v;
    mean_p /= T(n);
    const T denom = std::max(mean_p, inf_norm(sp.q));
    const T gamma = denom > T(0) ? T(1) / denom : T(1);
    scale_inplace(sp.p_full.values, gamma);
    scale_inplace(sp.q, gamma);
    sp.scaling.c *= gamma;

    deviation = T(0);
    for (const T& v : delta_x) deviation = std::max(deviation, std::abs(T(1) - v));
    for (const T& v : delta_z) deviation = std::max(deviation, std::abs(T(1) - v));
  }

  sp.passes_used = pass;
  sp.final_delta_deviation = deviation;
  // The per-pass scaling multiplies a and a_t in different orders, which can
  // differ in the last ulp; re-transposing restores an exactly consistent
  // pair.
  sp.a_t = transpose_csr(sp.a);
  sp.scaling.d_inv = detail::reciprocal(sp.scaling.d);
  sp.scaling.e_inv = detail::reciprocal(sp.scaling.e);
  sp.scaling.c_inv = T(1) / sp.scaling.c;

  sp.l.resize(m);
  sp.u.resize(m);
  for (index_t j = 0; j < m; ++j) {
    sp.l[j] = sp.scaling.e[j] * l[j];
    sp.u[j] = sp.scaling.e[j] * u[j];
  }
  return sp;
}

// No-op scaling (D = E = I, c = 1); used when equilibration is disabled.
template <typename T>
ScaledProblem<T> identity_scaled_problem(const CsrMatrix<T>& p_full,
                                         const std::vector<T>& q,
                                         const CsrMatrix<T>& a,
                                         const std::vector<T>& l,
                                         const std::vector<T>& u) {
  ScaledProblem<T> sp;
  sp.p_full = p_full;
  sp.q = q;
  sp.a = a;
  sp.a_t = transpose_csr(a);
  sp.l = l;
  sp.u = u;
  sp.scaling = ScalingData<T>::identity(p_full.rows, a.rows);
  return sp;
}

// Maps scaled-space iterates back to the original space:
//   x = D x_s,  z = E^-1 z_s,  y = (1/c) E y_s.
template <typename T>
std::tuple<std::vector<T>, std::vector<T>, std::vector<T>> unscale_solution(
    const ScalingData<T>& s, const std::vector<T>& x_s,
    const std::vector<T>& z_s, const std::vector<T>& y_s) {
  if (x_s.size() != s.d.size() || z_s.size() != s.e.size() ||
      y_s.size() != s.e.size()) {
    throw std::invalid_argument("unscale_solution: dimension mismatch");
  }
  std::vector<T> x = ew_product(s.d, x_s);
  std::vector<T> z = ew_product(s.e_inv, z_s);
  std::vector<T> y = ew_product(s.e, y_s);
  scale_inplace(y, s.c_inv);
  return {std::move(x), std::move(z), std::move(y)};
}

// Scaled residuals satisfy r_prim_s = E r_prim and r_dual_s = c D r_dual;
// this inverts that map.
template <typename T>
std::pair<std::vector<T>, std::vector<T>> unscale_residuals(
    const ScalingData<T>& s, const std::vector<T>& r_prim_s,
    const std::vector<T>& r_dual_s) {
  if (r_prim_s.size() != s.e.size() || r_dual_s.size() != s.d.size()) {
    throw std::invalid_argument("unscale_residuals: dimension mismatch");
  }
  std::vector<T> r_prim = ew_product(s.e_inv, r_prim_s);
  std::vector<T> r_dual = ew_product(s.d_inv, r_dual_s);
  scale_inplace(r_dual, s.c_inv);
  return {std::move(r_prim), std::move(r_dual)};
}

}  // namespace qpcg

#endif  // QPCG_SCALING_HPP
