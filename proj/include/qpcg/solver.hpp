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

// Operator-splitting QP solver. Each iteration solves the reduced KKT system
// (P + sigma I + rho A'A) x~ = sigma x - q + A'(rho z - y) with warm-started
// PCG, relaxes, projects onto the box, and takes a dual step:
//
//   x+ <- alpha x~ + (1 - alpha) x
//   z+ <- clamp(alpha z~ + (1 - alpha) z + y/rho, l, u)
//   y+ <- y + rho (alpha z~ + (1 - alpha) z - z+)
//
// with z~ = A x~. The penalty rho is a scalar, adapted every
// rho_update_interval iterations from the ratio of relative residuals;
// optimality and infeasibility are tested every check_interval iterations.
// The problem is Ruiz-equilibrated up front and the solution unscaled on
// exit, so all tolerances apply to the original data.
//
// For every k > 0 the pair (z, y) satisfies the box and complementarity
// conditions by construction: the dual step is evaluated as
// y+ = rho (w - clamp(w, l, u)), which is exactly zero wherever the
// projection did not clip.

#ifndef QPCG_SOLVER_HPP
#define QPCG_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpcg/linsys.hpp"
#include "qpcg/problem.hpp"
#include "qpcg/scaling.hpp"
#include "qpcg/settings.hpp"
#include "qpcg/sparse.hpp"
#include "qpcg/types.hpp"
#include "qpcg/vector_ops.hpp"

namespace qpcg {

enum class SolveStatus {
  kSolved,
  kPrimalInfeasible,
  kDualInfeasible,
  kMaxIterReached,
};

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSolved: return "solved";
    case SolveStatus::kPrimalInfeasible: return "primal_infeasible";
    case SolveStatus::kDualInfeasible: return "dual_infeasible";
    case SolveStatus::kMaxIterReached: return "max_iter_reached";
  }
  return "unknown";
}

template <typename T>
struct SolveOutcome {
  SolveStatus status = SolveStatus::kMaxIterReached;
  std::vector<T> x;  // unscaled
  std::vector<T> y;
  std::vector<T> z;
  // Unit-infinity-norm infeasibility certificate: delta-y for primal
  // infeasible, delta-x for dual infeasible; empty otherwise.
  std::vector<T> certificate;
  T objective = T(0);  // on original data; +inf / -inf when infeasible
  index_t iterations = 0;
  std::uint64_t pcg_iterations_total = 0;
  T r_prim_inf = T(0);  // unscaled residual norms at exit
  T r_dual_inf = T(0);
  double runtime_seconds = 0.0;
  // Solver info.
  index_t equil_passes = 0;
  T equil_residual = T(0);
  T rho_final = T(0);
  index_t rho_update_count = 0;
};

template <typename T>
struct WarmStart {
  std::vector<T> x;
  std::vector<T> z;
  std::vector<T> y;
};

template <typename T>
struct SolverState {
  std::vector<T> x, z, y;
  std::vector<T> x_tilde, z_tilde;
  std::vector<T> x_prev, z_prev, y_prev;
  std::vector<T> delta_x, delta_y;
  T rho_bar = T(0);
  index_t iter = 0;
  std::vector<T> pcg_warm;
  // Workspace reused across iterations.
  std::vector<T> rhs, tmp_m, w;

  static SolverState zeros(index_t n, index_t m, T rho) {
    SolverState st;
    st.x.assign(n, T(0));
    st.z.assign(m, T(0));
    st.y.assign(m, T(0));
    st.x_tilde.assign(n, T(0));
    st.z_tilde.assign(m, T(0));
    st.x_prev.assign(n, T(0));
    st.z_prev.assign(m, T(0));
    st.y_prev.assign(m, T(0));
    st.delta_x.assign(n, T(0));
    st.delta_y.assign(m, T(0));
    st.pcg_warm.assign(n, T(0));
    st.rhs.assign(n, T(0));
    st.tmp_m.assign(m, T(0));
    st.w.assign(m, T(0));
    st.rho_bar = rho;
    return st;
  }
};

// Iteration-level view handed to the diagnostics callback (scaled space).
template <typename T>
struct IterationView {
  index_t iter;
  const std::vector<T>& x;
  const std::vector<T>& z;
  const std::vector<T>& y;
  const std::vector<T>& l;
  const std::vector<T>& u;
};

// Optional instrumentation; every field is append-only during a solve.
template <typename T>
struct SolveDiagnostics {
  struct PcgCall {
    index_t admm_iter;      // iteration the call belongs to (1-based)
    T eps;                  // tolerance handed to PCG
    T r_prim_scaled_inf;    // residual norms the tolerance was derived from
    T r_dual_scaled_inf;
    index_t iterations;
    bool converged;
  };
  struct RhoUpdate {
    index_t admm_iter;
    T rho_before;
    T rho_after;
  };
  std::vector<PcgCall> pcg_calls;
  std::vector<index_t> check_iterations;
  std::vector<RhoUpdate> rho_updates;
  std::function<void(const IterationView<T>&)> on_iteration;
};

template <typename T>
std::vector<T> project_box(const std::vector<T>& v, const std::vector<T>& l,
                           const std::vector<T>& u) {
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = std::min(std::max(v[i], l[i]), u[i]);
  }
  return out;
}

// Residuals on scaled data, plus the matrix-vector products they are built
// from (the products feed the relative-tolerance norms).
template <typename T>
struct ResidualData {
  std::vector<T> r_prim;  // A x - z
  std::vector<T> r_dual;  // P x + q + A' y
  std::vector<T> ax, px, aty;
  T r_prim_inf = T(0);
  T r_dual_inf = T(0);
};

template <typename T>
ResidualData<T> compute_residuals(const ScaledProblem<T>& sp,
                                  const std::vector<T>& x,
                                  const std::vector<T>& z,
                                  const std::vector<T>& y) {
  ResidualData<T> r;
  spmv(sp.a, x, r.ax);
  spmv(sp.p_full, x, r.px);
  spmv(sp.a_t, y, r.aty);
  const index_t m = sp.a.rows;
  const index_t n = sp.p_full.rows;
  r.r_prim.resize(m);
  for (index_t i = 0; i < m; ++i) r.r_prim[i] = r.ax[i] - z[i];
  r.r_dual.resize(n);
  for (index_t i = 0; i < n; ++i) r.r_dual[i] = r.px[i] + sp.q[i] + r.aty[i];
  r.r_prim_inf = inf_norm(r.r_prim);
  r.r_dual_inf = inf_norm(r.r_dual);
  return r;
}

template <typename T>
struct IterateNorms {
  T ax_inf = T(0);
  T z_inf = T(0);
  T px_inf = T(0);
  T aty_inf = T(0);
  T q_inf = T(0);
};

// eps_prim = eps_abs + eps_rel max(|Ax|, |z|)
// eps_dual = eps_abs + eps_rel max(|Px|, |A'y|, |q|)
template <typename T>
bool check_optimal(T r_prim_inf, T r_dual_inf, const IterateNorms<T>& norms,
                   const Settings<T>& s) {
  const T eps_prim =
      s.eps_abs + s.eps_rel * std::max(norms.ax_inf, norms.z_inf);
  const T eps_dual =
      s.eps_abs +
      s.eps_rel * std::max({norms.px_inf, norms.aty_inf, norms.q_inf});
  return r_prim_inf <= eps_prim && r_dual_inf <= eps_dual;
}

// Primal infeasibility certificate test on original data. The candidate is
// normalized to unit infinity norm; a zero vector is never a certificate.
// Components larger than eps_pinf against an infinite bound disqualify it.
template <typename T>
bool check_primal_infeasible(const std::vector<T>& delta_y,
                             const CsrMatrix<T>& a_transpose,
                             const std::vector<T>& l, const std::vector<T>& u,
                             T eps_pinf) {
  const T norm = inf_norm(delta_y);
  if (norm == T(0)) return false;
  std::vector<T> v = delta_y;
  scale_inplace(v, T(1) / norm);

  const std::vector<T> atv = spmv(a_transpose, v);
  if (inf_norm(atv) > eps_pinf) return false;

  T support = T(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const T neg = std::min(v[i], T(0));
    const T pos = std::max(v[i], T(0));
    if (l[i] == -infinity<T>()) {
      if (neg < -eps_pinf) return false;
    } else {
      support += l[i] * neg;
    }
    if (u[i] == infinity<T>()) {
      if (pos > eps_pinf) return false;
    } else {
      support += u[i] * pos;
    }
  }
  return support < eps_pinf;
}

// Dual infeasibility certificate test on original data:
//   |P dx|_inf <= eps,  q'dx < eps,  and per row of A dx:
//   within [-eps, eps] for two-sided rows, >= -eps when u = +inf,
//   <= eps when l = -inf.
template <typename T>
bool check_dual_infeasible(const std::vector<T>& delta_x,
                           const CsrMatrix<T>& p_full, const CsrMatrix<T>& a,
                           const std::vector<T>& q, const std::vector<T>& l,
                           const std::vector<T>& u, T eps_dinf) {
  const T norm = inf_norm(delta_x);
  if (norm == T(0)) return false;
  std::vector<T> v = delta_x;
  scale_inplace(v, T(1) / norm);

  if (inf_norm(spmv(p_full, v)) > eps_dinf) return false;
  if (!(dot(q, v) < eps_dinf)) return false;

  const std::vector<T> av = spmv(a, v);
  for (std::size_t i = 0; i < av.size(); ++i) {
    const bool l_finite = l[i] != -infinity<T>();
    const bool u_finite = u[i] != infinity<T>();
    if (l_finite && u_finite) {
      if (std::abs(av[i]) > eps_dinf) return false;
    } else if (!u_finite && l_finite) {
      if (av[i] < -eps_dinf) return false;
    } else if (!l_finite && u_finite) {
      if (av[i] > eps_dinf) return false;
    }
    // Free rows constrain nothing.
  }
  return true;
}

// Penalty adaptation from the ratio of relative residuals (scaled data):
//   rho+ = clip(rho sqrt(rel_prim / rel_dual), 1e-6, 1e6).
template <typename T>
T adapt_rho(T rho, T r_prim_scaled_inf, T r_dual_scaled_inf,
            const IterateNorms<T>& norms) {
  const T floor = T(1e-10);
  const T rel_prim =
      r_prim_scaled_inf / std::max({norms.ax_inf, norms.z_inf, floor});
  const T rel_dual =
      r_dual_scaled_inf /
      std::max({norms.px_inf, norms.aty_inf, norms.q_inf, floor});
  if (rel_prim == T(0) && rel_dual == T(0)) return rho;
  if (rel_dual == T(0)) return T(1e6);
  const T next = rho * std::sqrt(rel_prim / rel_dual);
  return std::clamp(next, T(1e-6), T(1e6));
}

// Maps consecutive-iterate differences back to the original space.
template <typename T>
std::pair<std::vector<T>, std::vector<T>> certificate_vectors(
    const std::vector<T>& delta_x_scaled, const std::vector<T>& delta_y_scaled,
    const ScalingData<T>& s) {
  std::vector<T> dx = ew_product(s.d, delta_x_scaled);
  std::vector<T> dy = ew_product(s.e, delta_y_scaled);
  scale_inplace(dy, s.c_inv);
  return {std::move(dx), std::move(dy)};
}

namespace detail {

template <typename T>
index_t pcg_iteration_cap(index_t n) {
  const auto by_dim = static_cast<index_t>(
      std::ceil(T(20) * std::sqrt(static_cast<T>(n))));
  return std::max<index_t>(20, std::min<index_t>(by_dim, n));
}

}  // namespace detail

// One iteration on scaled data. The PCG warm start is the previous x~;
// returns the PCG stats for instrumentation.
template <typename T>
PcgResult<T> admm_step(SolverState<T>& st, ReducedKktOperator<T>& op,
                       const JacobiPreconditioner<T>& precond,
                       const ScaledProblem<T>& sp, const Settings<T>& s,
                       T pcg_eps) {
  const index_t n = sp.p_full.rows;
  const index_t m = sp.a.rows;
  const T rho = op.rho_bar();
  const T alpha = s.alpha;

  // rhs = sigma x - q + A'(rho z - y)
  for (index_t i = 0; i < m; ++i) st.tmp_m[i] = rho * st.z[i] - st.y[i];
  spmv(sp.a_t, st.tmp_m, st.rhs);
  for (index_t i = 0; i < n; ++i) {
    st.rhs[i] += s.sigma * st.x[i] - sp.q[i];
  }

  PcgResult<T> res = pcg_solve(op, precond, st.rhs, st.pcg_warm, pcg_eps,
                               detail::pcg_iteration_cap<T>(n));
  st.x_tilde = std::move(res.solution);
  spmv(sp.a, st.x_tilde, st.z_tilde);

  st.x_prev = st.x;
  st.z_prev = st.z;
  st.y_prev = st.y;

  for (index_t i = 0; i < n; ++i) {
    st.x[i] = alpha * st.x_tilde[i] + (T(1) - alpha) * st.x_prev[i];
  }
  for (index_t i = 0; i < m; ++i) {
    st.w[i] = alpha * st.z_tilde[i] + (T(1) - alpha) * st.z_prev[i] +
              st.y_prev[i] / rho;
    st.z[i] = std::min(std::max(st.w[i], sp.l[i]), sp.u[i]);
    // Equal to y_prev + rho (alpha z~ + (1-alpha) z_prev - z); in this form
    // the unclipped components give exactly zero multipliers.
    st.y[i] = rho * (st.w[i] - st.z[i]);
  }
  for (index_t i = 0; i < n; ++i) st.delta_x[i] = st.x[i] - st.x_prev[i];
  for (index_t i = 0; i < m; ++i) st.delta_y[i] = st.y[i] - st.y_prev[i];

  st.pcg_warm = st.x_tilde;
  res.solution.clear();
  ++st.iter;
  return res;
}

template <typename T>
SolveOutcome<T> solve(const QpProblem<T>& p, const Settings<T>& s,
                      std::type_identity_t<const WarmStart<T>*> initial = nullptr,
                      std::type_identity_t<SolveDiagnostics<T>*> diag = nullptr) {
  validate(p);
  validate(s);
  const auto t_start = std::chrono::steady_clock::now();

  const index_t n = p.num_vars();
  const index_t m = p.num_constraints();

  const CsrMatrix<T> p_full_orig = symmetrize_upper(p.p_upper);
  const CsrMatrix<T> a_t_orig = transpose_csr(p.a);
  const T q_inf_orig = inf_norm(p.q);

  ScaledProblem<T> sp =
      s.scaling_enabled
          ? ruiz_equilibrate(p_full_orig, p.q, p.a, p.l, p.u, s.eps_equil,
                             s.equil_max_passes)
          : identity_scaled_problem(p_full_orig, p.q, p.a, p.l, p.u);
  const ScalingData<T>& sc = sp.scaling;
  const T q_inf_scaled = inf_norm(sp.q);

  ReducedKktOperator<T> op(sp.p_full, sp.a, sp.a_t, s.sigma, s.rho_bar_init);
  JacobiPreconditioner<T> precond = build_preconditioner(op);

  SolverState<T> st = SolverState<T>::zeros(n, m, s.rho_bar_init);
  if (initial != nullptr) {
    if (initial->x.size() != n || initial->z.size() != m ||
        initial->y.size() != m) {
      throw std::invalid_argument("solve: warm start dimension mismatch");
    }
    if (!all_finite(initial->x) || !all_finite(initial->z) ||
        !all_finite(initial->y)) {
      throw std::invalid_argument("solve: warm start must be finite");
    }
    // Original -> scaled: x_s = D^-1 x, z_s = E z, y_s = c E^-1 y.
    st.x = ew_product(sc.d_inv, initial->x);
    st.z = ew_product(sc.e, initial->z);
    st.y = ew_product(sc.e_inv, initial->y);
    scale_inplace(st.y, sc.c);
    st.pcg_warm = st.x;
  }

  SolveOutcome<T> out;
  out.equil_passes = sp.passes_used;
  out.equil_residual = sp.final_delta_deviation;

  // The adaptive PCG tolerance wants the most recent residuals; seed it from
  // the initial iterates.
  ResidualData<T> res = compute_residuals(sp, st.x, st.z, st.y);
  T pcg_eps =
      adaptive_eps(res.r_prim_inf, res.r_dual_inf, s.lambda_pcg, s.eps_pcg_min);
  T last_rp_scaled = res.r_prim_inf;
  T last_rd_scaled = res.r_dual_inf;
  bool residuals_current = true;  // res matches the current iterates

  bool done = false;
  while (!done && st.iter < s.max_admm_iter) {
    const PcgResult<T> pcg = admm_step(st, op, precond, sp, s, pcg_eps);
    out.pcg_iterations_total += pcg.iterations;
    if (diag != nullptr) {
      diag->pcg_calls.push_back({st.iter, pcg_eps, last_rp_scaled,
                                 last_rd_scaled, pcg.iterations,
                                 pcg.converged});
      if (diag->on_iteration) {
        diag->on_iteration(
            IterationView<T>{st.iter, st.x, st.z, st.y, sp.l, sp.u});
      }
    }
    residuals_current = false;

    if (st.iter % s.check_interval == 0) {
      if (diag != nullptr) diag->check_iterations.push_back(st.iter);
      res = compute_residuals(sp, st.x, st.z, st.y);
      residuals_current = true;
      last_rp_scaled = res.r_prim_inf;
      last_rd_scaled = res.r_dual_inf;
      pcg_eps = adaptive_eps(res.r_prim_inf, res.r_dual_inf, s.lambda_pcg,
                             s.eps_pcg_min);

      // Termination is decided against the original data.
      IterateNorms<T> norms_orig;
      norms_orig.ax_inf = inf_norm_scaled(res.ax, sc.e_inv);
      norms_orig.z_inf = inf_norm_scaled(st.z, sc.e_inv);
      norms_orig.px_inf = sc.c_inv * inf_norm_scaled(res.px, sc.d_inv);
      norms_orig.aty_inf = sc.c_inv * inf_norm_scaled(res.aty, sc.d_inv);
      norms_orig.q_inf = q_inf_orig;
      const T rp_orig = inf_norm_scaled(res.r_prim, sc.e_inv);
      const T rd_orig = sc.c_inv * inf_norm_scaled(res.r_dual, sc.d_inv);
      if (check_optimal(rp_orig, rd_orig, norms_orig, s)) {
        out.status = SolveStatus::kSolved;
        done = true;
      }

      if (!done) {
        auto [dx, dy] = certificate_vectors(st.delta_x, st.delta_y, sc);
        if (check_primal_infeasible(dy, a_t_orig, p.l, p.u, s.eps_pinf)) {
          out.status = SolveStatus::kPrimalInfeasible;
          scale_inplace(dy, T(1) / inf_norm(dy));
          out.certificate = std::move(dy);
          done = true;
        } else if (check_dual_infeasible(dx, p_full_orig, p.a, p.q, p.l, p.u,
                                         s.eps_dinf)) {
          out.status = SolveStatus::kDualInfeasible;
          scale_inplace(dx, T(1) / inf_norm(dx));
          out.certificate = std::move(dx);
          done = true;
        }
      }
    }

    if (!done && st.iter % s.rho_update_interval == 0) {
      IterateNorms<T> norms_scaled;
      norms_scaled.ax_inf = inf_norm(res.ax);
      norms_scaled.z_inf = inf_norm(st.z);
      norms_scaled.px_inf = inf_norm(res.px);
      norms_scaled.aty_inf = inf_norm(res.aty);
      norms_scaled.q_inf = q_inf_scaled;
      const T next =
          adapt_rho(op.rho_bar(), last_rp_scaled, last_rd_scaled, norms_scaled);
      if (diag != nullptr) {
        diag->rho_updates.push_back({st.iter, op.rho_bar(), next});
      }
      update_rho(op, precond, next);
      st.rho_bar = next;
      ++out.rho_update_count;
    }
  }

  if (!residuals_current) {
    res = compute_residuals(sp, st.x, st.z, st.y);
  }
  out.iterations = st.iter;
  out.rho_final = op.rho_bar();
  auto [x, z, y] = unscale_solution(sc, st.x, st.z, st.y);
  out.r_prim_inf = inf_norm_scaled(res.r_prim, sc.e_inv);
  out.r_dual_inf = sc.c_inv * inf_norm_scaled(res.r_dual, sc.d_inv);

  if (out.status == SolveStatus::kPrimalInfeasible) {
    out.objective = infinity<T>();
  } else if (out.status == SolveStatus::kDualInfeasible) {
    out.objective = -infinity<T>();
  } else {
    const std::vector<T> px = spmv(p_full_orig, x);
    out.objective = T(0.5) * dot(x, px) + dot(p.q, x);
  }
  out.x = std::move(x);
  out.z = std::move(z);
  out.y = std::move(y);

  out.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return out;
}

}  // namespace qpcg

#endif  // QPCG_SOLVER_HPP
