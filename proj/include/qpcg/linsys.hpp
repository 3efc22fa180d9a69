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

// Matrix-free reduced KKT operator K = P + sigma I + rho A'A, its Jacobi
// preconditioner, and the preconditioned conjugate gradient solve with warm
// start and an adaptive relative tolerance. K is never formed; applying it
// is the two-step sequence z <- rho A x, r <- P x + sigma x + A' z.

#ifndef QPCG_LINSYS_HPP
#define QPCG_LINSYS_HPP

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qpcg/sparse.hpp"
#include "qpcg/types.hpp"
#include "qpcg/vector_ops.hpp"

namespace qpcg {

template <typename T>
class ReducedKktOperator {
 public:
  // p_full must be the full symmetric P; a_t must be the transpose of a
  // (checked entry-for-entry at construction). diag(P) and diag(A'A) are
  // cached here so a later penalty update costs O(n).
  ReducedKktOperator(const CsrMatrix<T>& p_full, const CsrMatrix<T>& a,
                     const CsrMatrix<T>& a_t, T sigma, T rho_bar)
      : p_full_(p_full),
        a_(a),
        a_t_(a_t),
        sigma_(sigma),
        rho_bar_(rho_bar),
        scratch_z_(a.rows) {
    if (!(sigma > T(0)) || !(rho_bar > T(0))) {
      throw std::invalid_argument("kkt operator: sigma and rho must be positive");
    }
    if (p_full.rows != p_full.cols || a.cols != p_full.cols ||
        a_t.rows != a.cols || a_t.cols != a.rows) {
      throw std::invalid_argument("kkt operator: dimension mismatch");
    }
    const CsrMatrix<T> t = transpose_csr(a);
    if (t.row_ptr != a_t.row_ptr || t.col_indices != a_t.col_indices ||
        t.values != a_t.values) {
      throw std::invalid_argument("kkt operator: a_t is not the transpose of a");
    }
    diag_p_ = extract_diagonal(p_full);
    diag_ata_ = diag_ata(a);
  }

  index_t dim() const { return p_full_.rows; }
  T sigma() const { return sigma_; }
  T rho_bar() const { return rho_bar_; }
  const std::vector<T>& cached_diag_p() const { return diag_p_; }
  const std::vector<T>& cached_diag_ata() const { return diag_ata_; }
  const CsrMatrix<T>& a() const { return a_; }
  const CsrMatrix<T>& a_t() const { return a_t_; }
  const CsrMatrix<T>& p_full() const { return p_full_; }

  void set_rho_bar(T rho) {
    if (!(rho > T(0))) {
      throw std::invalid_argument("kkt operator: rho must be positive");
    }
    rho_bar_ = rho;
  }

  // out = (P + sigma I + rho A'A) x
  void apply(const std::vector<T>& x, std::vector<T>& out) {
    if (x.size() != dim()) {
      throw std::invalid_argument("kkt operator: vector length mismatch");
    }
    spmv(a_, x, scratch_z_);
    scale_inplace(scratch_z_, rho_bar_);
    spmv(p_full_, x, out);
    axpy(sigma_, x, out);
    spmv(a_t_, scratch_z_, scratch_n_);
    for (index_t i = 0; i < dim(); ++i) out[i] += scratch_n_[i];
  }

  std::vector<T> apply(const std::vector<T>& x) {
    std::vector<T> out;
    apply(x, out);
    return out;
  }

 private:
  CsrMatrix<T> p_full_;
  CsrMatrix<T> a_;
  CsrMatrix<T> a_t_;
  T sigma_;
  T rho_bar_;
  std::vector<T> diag_p_;
  std::vector<T> diag_ata_;
  std::vector<T> scratch_z_;  // workspace for rho A x
  std::vector<T> scratch_n_;
};

template <typename T>
std::vector<T> apply_operator(ReducedKktOperator<T>& op,
                              const std::vector<T>& x) {
  return op.apply(x);
}

template <typename T>
struct JacobiPreconditioner {
  std::vector<T> diag_m;
  std::vector<T> diag_m_inv;

  static JacobiPreconditioner identity(index_t n) {
    JacobiPreconditioner p;
    p.diag_m.assign(n, T(1));
    p.diag_m_inv.assign(n, T(1));
    return p;
  }

  // y = M^-1 r
  void apply(const std::vector<T>& r, std::vector<T>& y) const {
    y.resize(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) y[i] = diag_m_inv[i] * r[i];
  }
};

// diag(M) = diag(P) + sigma 1 + rho diag(A'A), from the operator's caches.
template <typename T>
JacobiPreconditioner<T> build_preconditioner(const ReducedKktOperator<T>& op) {
  JacobiPreconditioner<T> pre;
  const index_t n = op.dim();
  pre.diag_m.resize(n);
  pre.diag_m_inv.resize(n);
  for (index_t i = 0; i < n; ++i) {
    pre.diag_m[i] = op.cached_diag_p()[i] + op.sigma() +
                    op.rho_bar() * op.cached_diag_ata()[i];
    pre.diag_m_inv[i] = T(1) / pre.diag_m[i];
  }
  return pre;
}

// Penalty update: only rho and the preconditioner diagonal change; no matrix
// work is done.
template <typename T>
void update_rho(ReducedKktOperator<T>& op, JacobiPreconditioner<T>& precond,
                T new_rho) {
  op.set_rho_bar(new_rho);
  precond = build_preconditioner(op);
}

template <typename T>
struct PcgResult {
  std::vector<T> solution;
  index_t iterations = 0;
  T final_residual_norm = T(0);
  bool converged = false;
};

// PCG tolerance from the latest scaled ADMM residuals:
//   eps = max(lambda * sqrt(r_prim * r_dual), eps_min),  lambda in (0, 1).
template <typename T>
T adaptive_eps(T r_prim_scaled_inf, T r_dual_scaled_inf, T lambda, T eps_min) {
  if (r_prim_scaled_inf < T(0) || r_dual_scaled_inf < T(0)) {
    throw std::invalid_argument("adaptive_eps: residual norms must be >= 0");
  }
  if (!(lambda > T(0)) || !(lambda < T(1))) {
    throw std::invalid_argument("adaptive_eps: lambda must be in (0, 1)");
  }
  return std::max(lambda * std::sqrt(r_prim_scaled_inf * r_dual_scaled_inf),
                  eps_min);
}

// Preconditioned conjugate gradient for K x = b. The loop guard uses the
// infinity norm, |r|_inf <= eps |b|_inf, matching the norm the outer
// iteration uses for its residuals. The observer is invoked with
// (k, x, r, p, y) after initialization and after every iteration.
//
// Nonconvergence is not an error: when the iteration cap is hit, the iterate
// with the smallest residual norm seen so far is returned with
// converged = false. A search direction of nonpositive curvature throws
// NotPositiveDefiniteError.
template <typename T, typename Observer>
PcgResult<T> pcg_solve(ReducedKktOperator<T>& op,
                       const JacobiPreconditioner<T>& precond,
                       const std::vector<T>& b,
                       const std::vector<T>& warm_start, T eps,
                       index_t max_iter, Observer&& observer) {
  if (!(eps > T(0))) {
    throw std::invalid_argument("pcg: eps must be positive");
  }
  const index_t n = op.dim();
  if (b.size() != n || warm_start.size() != n) {
    throw std::invalid_argument("pcg: dimension mismatch");
  }
  if (!all_finite(warm_start)) {
    throw std::invalid_argument("pcg: warm start must be finite");
  }

  PcgResult<T> result;
  const T b_norm = inf_norm(b);
  if (b_norm == T(0)) {
    result.solution.assign(n, T(0));
    result.converged = true;
    return result;
  }
  const T threshold = eps * b_norm;

  std::vector<T> x = warm_start;
  std::vector<T> r;
  op.apply(x, r);                                   // r0 = K x0 - b
  for (index_t i = 0; i < n; ++i) r[i] -= b[i];
  std::vector<T> y;
  precond.apply(r, y);                              // y0 = M^-1 r0
  std::vector<T> p(n);
  for (index_t i = 0; i < n; ++i) p[i] = -y[i];     // p0 = -y0

  std::vector<T> kp(n);
  T r_norm = inf_norm(r);
  std::vector<T> best_x = x;
  T best_norm = r_norm;
  T rm_dot = dot(r, y);  // (r_k)' y_k

  observer(index_t(0), x, r, p, y);

  index_t k = 0;
  while (r_norm > threshold) {
    if (k >= max_iter) {
      result.solution = std::move(best_x);
      result.iterations = k;
      result.final_residual_norm = best_norm;
      result.converged = false;
      return result;
    }
    // Zero residual in the M norm; nothing left to reduce.
    if (rm_dot == T(0)) break;

    op.apply(p, kp);
    const T curvature = dot(p, kp);
    if (curvature <= T(0)) {
      throw NotPositiveDefiniteError(
          "pcg: encountered direction of nonpositive curvature");
    }
    // Exact line search along p: with r = Kx - b and p = -y + beta p_prev,
    // the minimizing step is -r'p / p'Kp = +r'y / p'Kp.
    const T alpha = rm_dot / curvature;
    axpy(alpha, p, x);
    axpy(alpha, kp, r);  // r_{k+1} = r_k + alpha K p_k
    precond.apply(r, y);
    const T rm_next = dot(r, y);
    const T beta = rm_next / rm_dot;
    for (index_t i = 0; i < n; ++i) p[i] = -y[i] + beta * p[i];
    rm_dot = rm_next;
    ++k;

    r_norm = inf_norm(r);
    if (r_norm < best_norm) {
      best_norm = r_norm;
      best_x = x;
    }
    observer(k, x, r, p, y);
  }

  result.solution = std::move(x);
  result.iterations = k;
  result.final_residual_norm = r_norm;
  result.converged = true;
  return result;
}

template <typename T>
PcgResult<T> pcg_solve(ReducedKktOperator<T>& op,
                       const JacobiPreconditioner<T>& precond,
                       const std::vector<T>& b,
                       const std::vector<T>& warm_start, T eps,
                       index_t max_iter) {
  return pcg_solve(op, precond, b, warm_start, eps, max_iter,
                   [](index_t, const std::vector<T>&, const std::vector<T>&,
                      const std::vector<T>&, const std::vector<T>&) {});
}

}  // namespace qpcg

#endif  // QPCG_LINSYS_HPP
