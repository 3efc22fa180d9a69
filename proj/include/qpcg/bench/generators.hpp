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

// Seeded generators for the seven benchmark problem classes, each reduced to
// the box-constrained QP form. The make_* builders perform the (exact)
// reformulations from given data; the gen_* functions draw random data with
// the counter RNG, so one (class, scale, seed) triple always yields the
// identical problem.
//
// Data recipes (all draws in double, in a fixed order):
//   control    LTI system x+ = Ax + Bu over horizon 10; A dense N(0,1)
//              scaled to max-row-sum norm 0.95, B dense N(0,1); diagonal
//              costs Q, Q_T ~ U(0.1, 2), R ~ U(0.1, 1); scalar state bound
//              ~ U(1, 3), input bound ~ U(0.5, 2); x_init ~ U(-.5, .5) x
//              the state bound (feasible by construction).
//   equality   P = G'G + 0.1 I with G having 3 N(0,1) entries per row;
//              A with 15% density N(0,1); b = A x0 for x0 ~ N(0,1).
//   huber      data A 15% density N(0,1), b = A x_true + 0.01 N(0,1) with
//              10% outliers shifted by +-U(5, 10); M = 1.
//   lasso      data A 15% density, x_true 10% dense N(0,1), b = A x_true
//              + 0.01 N(0,1); lambda = |A'b|_inf / 5.
//   portfolio  k = n/100 factors, F' 50% density N(0,1), asset variances
//              d ~ U(0, sqrt(k)), returns mu ~ N(0,1); gamma = 1.
//   random     P = G'G + 0.1 I (3 per row), A 15% density, q ~ N(0,1);
//              bounds A x0 -+ U(0.05, 1.05) around a planted x0 ~ N(0,1).
//   svm        two clouds of n-feature points (15% density) centered at
//              +-1/sqrt(0.15 n) per label; lambda = 1.

#ifndef QPCG_BENCH_GENERATORS_HPP
#define QPCG_BENCH_GENERATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qpcg/bench/rng.hpp"
#include "qpcg/problem.hpp"
#include "qpcg/sparse.hpp"
#include "qpcg/types.hpp"
#include "qpcg/vector_ops.hpp"

namespace qpcg::bench {

enum class ProblemClass {
  kControl,
  kEquality,
  kHuber,
  kLasso,
  kPortfolio,
  kRandom,
  kSvm,
};

inline const char* to_string(ProblemClass c) {
  switch (c) {
    case ProblemClass::kControl: return "control";
    case ProblemClass::kEquality: return "equality";
    case ProblemClass::kHuber: return "huber";
    case ProblemClass::kLasso: return "lasso";
    case ProblemClass::kPortfolio: return "portfolio";
    case ProblemClass::kRandom: return "random";
    case ProblemClass::kSvm: return "svm";
  }
  return "unknown";
}

inline ProblemClass class_from_string(const std::string& s) {
  if (s == "control") return ProblemClass::kControl;
  if (s == "equality") return ProblemClass::kEquality;
  if (s == "huber") return ProblemClass::kHuber;
  if (s == "lasso") return ProblemClass::kLasso;
  if (s == "portfolio") return ProblemClass::kPortfolio;
  if (s == "random") return ProblemClass::kRandom;
  if (s == "svm") return ProblemClass::kSvm;
  throw std::invalid_argument("unknown problem class: " + s);
}

inline std::vector<ProblemClass> all_classes() {
  return {ProblemClass::kControl,   ProblemClass::kEquality,
          ProblemClass::kHuber,     ProblemClass::kLasso,
          ProblemClass::kPortfolio, ProblemClass::kRandom,
          ProblemClass::kSvm};
}

struct BenchSpec {
  ProblemClass problem_class = ProblemClass::kRandom;
  index_t scale_index = 1;
  std::uint64_t seed = 0;
  index_t instances_per_size = 10;
};

// Scales sweep N = nnz(P) + nnz(A) geometrically from ~1e3 (scale 1) to
// ~1e6 (scale 8); scale 0 is a miniature size for tests.
inline std::uint64_t target_nnz(index_t scale_index) {
  if (scale_index == 0) return 300;
  return static_cast<std::uint64_t>(std::llround(
      1000.0 * std::pow(10.0, (scale_index - 1) * 3.0 / 7.0)));
}

namespace detail {

struct Triplet {
  index_t r;
  index_t c;
  double v;
};

inline CsrMatrix<double> csr_from_triplets(index_t rows, index_t cols,
                                           std::vector<Triplet>& t,
                                           bool sum_duplicates = false) {
  std::stable_sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
    return a.r != b.r ? a.r < b.r : a.c < b.c;
  });
  if (sum_duplicates) {
    std::vector<Triplet> merged;
    merged.reserve(t.size());
    for (const Triplet& e : t) {
      if (!merged.empty() && merged.back().r == e.r && merged.back().c == e.c) {
        merged.back().v += e.v;
      } else {
        merged.push_back(e);
      }
    }
    t.swap(merged);
  }
  CsrMatrix<double> m;
  m.rows = rows;
  m.cols = cols;
  m.row_ptr.assign(static_cast<std::size_t>(rows) + 1, 0);
  m.values.reserve(t.size());
  m.col_indices.reserve(t.size());
  for (const Triplet& e : t) {
    ++m.row_ptr[e.r + 1];
    m.values.push_back(e.v);
    m.col_indices.push_back(e.c);
  }
  for (index_t r = 0; r < rows; ++r) m.row_ptr[r + 1] += m.row_ptr[r];
  return m;
}

// Bernoulli-per-entry sparse matrix with N(0,1) values, row-major scan.
inline CsrMatrix<double> sample_sparse(CounterRng& rng, index_t rows,
                                       index_t cols, double density) {
  std::vector<Triplet> t;
  for (index_t r = 0; r < rows; ++r) {
    for (index_t c = 0; c < cols; ++c) {
      if (rng.bernoulli(density)) {
        t.push_back({r, c, rng.normal()});
      }
    }
  }
  return csr_from_triplets(rows, cols, t);
}

// Upper triangle of G'G + alpha I where G has nnz_per_row N(0,1) entries in
// distinct random columns of each of `rows` rows.
inline CsrMatrix<double> gram_psd_upper(CounterRng& rng, index_t n,
                                        index_t rows, index_t nnz_per_row,
                                        double alpha) {
  std::vector<Triplet> t;
  std::vector<index_t> cols(nnz_per_row);
  std::vector<double> vals(nnz_per_row);
  for (index_t r = 0; r < rows; ++r) {
    for (index_t j = 0; j < nnz_per_row; ++j) {
      index_t c;
      bool fresh;
      do {
        c = static_cast<index_t>(rng.next_below(n));
        fresh = true;
        for (index_t k = 0; k < j; ++k) fresh = fresh && cols[k] != c;
      } while (!fresh);
      cols[j] = c;
      vals[j] = rng.normal();
    }
    // Sort the row support so products land in upper-triangular order.
    std::vector<index_t> order(nnz_per_row);
    for (index_t j = 0; j < nnz_per_row; ++j) order[j] = j;
    std::sort(order.begin(), order.end(),
              [&](index_t a, index_t b) { return cols[a] < cols[b]; });
    for (index_t a = 0; a < nnz_per_row; ++a) {
      for (index_t b = a; b < nnz_per_row; ++b) {
        t.push_back({cols[order[a]], cols[order[b]],
                     vals[order[a]] * vals[order[b]]});
      }
    }
  }
  for (index_t i = 0; i < n; ++i) t.push_back({i, i, alpha});
  return csr_from_triplets(n, n, t, /*sum_duplicates=*/true);
}

template <typename T>
CsrMatrix<T> cast_matrix(const CsrMatrix<double>& m) {
  CsrMatrix<T> out;
  out.rows = m.rows;
  out.cols = m.cols;
  out.row_ptr = m.row_ptr;
  out.col_indices = m.col_indices;
  out.values.assign(m.values.begin(), m.values.end());
  return out;
}

template <typename T>
std::vector<T> cast_vector(const std::vector<double>& v) {
  return std::vector<T>(v.begin(), v.end());
}

template <typename T>
QpProblem<T> cast_problem(const QpProblem<double>& p) {
  QpProblem<T> out;
  out.p_upper = cast_matrix<T>(p.p_upper);
  out.q = cast_vector<T>(p.q);
  out.a = cast_matrix<T>(p.a);
  out.l = cast_vector<T>(p.l);
  out.u = cast_vector<T>(p.u);
  return out;
}

template <>
inline QpProblem<double> cast_problem<double>(const QpProblem<double>& p) {
  return p;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace detail

// ---------------------------------------------------------------------------
// Exact reformulation builders.
// ---------------------------------------------------------------------------

// Finite-horizon optimal control stacked over (x_0..x_T, u_0..u_{T-1}):
// dynamics and the initial state are equality rows, state and input bounds
// are box rows. Costs are diagonal.
inline QpProblem<double> make_control_qp(
    const std::vector<double>& a_dyn,  // nx * nx, row-major
    const std::vector<double>& b_in,   // nx * nu, row-major
    const std::vector<double>& q_diag, const std::vector<double>& r_diag,
    const std::vector<double>& qt_diag, const std::vector<double>& x_init,
    double x_bound, double u_bound, index_t horizon) {
  const index_t nx = static_cast<index_t>(q_diag.size());
  const index_t nu = static_cast<index_t>(r_diag.size());
  const index_t T_h = horizon;
  const index_t nvar = nx * (T_h + 1) + nu * T_h;
  const index_t u_offset = nx * (T_h + 1);

  QpProblem<double> p;
  std::vector<detail::Triplet> pt;
  for (index_t t = 0; t < T_h; ++t) {
    for (index_t i = 0; i < nx; ++i) {
      if (q_diag[i] != 0.0) pt.push_back({t * nx + i, t * nx + i, 2 * q_diag[i]});
    }
  }
  for (index_t i = 0; i < nx; ++i) {
    if (qt_diag[i] != 0.0) {
      pt.push_back({T_h * nx + i, T_h * nx + i, 2 * qt_diag[i]});
    }
  }
  for (index_t t = 0; t < T_h; ++t) {
    for (index_t i = 0; i < nu; ++i) {
      if (r_diag[i] != 0.0) {
        pt.push_back({u_offset + t * nu + i, u_offset + t * nu + i,
                      2 * r_diag[i]});
      }
    }
  }
  p.p_upper = detail::csr_from_triplets(nvar, nvar, pt);
  p.q.assign(nvar, 0.0);

  std::vector<detail::Triplet> at;
  std::vector<double> l, u;
  index_t row = 0;
  // x_0 = x_init
  for (index_t i = 0; i < nx; ++i, ++row) {
    at.push_back({row, i, 1.0});
    l.push_back(x_init[i]);
    u.push_back(x_init[i]);
  }
  // A x_t + B u_t - x_{t+1} = 0
  for (index_t t = 0; t < T_h; ++t) {
    for (index_t i = 0; i < nx; ++i, ++row) {
      for (index_t j = 0; j < nx; ++j) {
        const double v = a_dyn[i * nx + j];
        if (v != 0.0) at.push_back({row, t * nx + j, v});
      }
      at.push_back({row, (t + 1) * nx + i, -1.0});
      for (index_t j = 0; j < nu; ++j) {
        const double v = b_in[i * nu + j];
        if (v != 0.0) at.push_back({row, u_offset + t * nu + j, v});
      }
      l.push_back(0.0);
      u.push_back(0.0);
    }
  }
  // state bounds for t = 1..T
  for (index_t t = 1; t <= T_h; ++t) {
    for (index_t i = 0; i < nx; ++i, ++row) {
      at.push_back({row, t * nx + i, 1.0});
      l.push_back(-x_bound);
      u.push_back(x_bound);
    }
  }
  // input bounds
  for (index_t t = 0; t < T_h; ++t) {
    for (index_t i = 0; i < nu; ++i, ++row) {
      at.push_back({row, u_offset + t * nu + i, 1.0});
      l.push_back(-u_bound);
      u.push_back(u_bound);
    }
  }
  p.a = detail::csr_from_triplets(row, nvar, at);
  p.l = std::move(l);
  p.u = std::move(u);
  return p;
}

inline QpProblem<double> make_equality_qp(const CsrMatrix<double>& p_upper,
                                          const std::vector<double>& q,
                                          const CsrMatrix<double>& a,
                                          const std::vector<double>& b) {
  QpProblem<double> p;
  p.p_upper = p_upper;
  p.q = q;
  p.a = a;
  p.l = b;
  p.u = b;
  return p;
}

// Robust regression via the epigraph split of the Huber penalty: over
// (x, u, r, s), minimize u'u + 2M 1'(r + s) subject to
// Ax - b - u = r - s, r >= 0, s >= 0.
inline QpProblem<double> make_huber_qp(const CsrMatrix<double>& a_data,
                                       const std::vector<double>& b_data,
                                       double m_huber) {
  const index_t md = a_data.rows;
  const index_t n = a_data.cols;
  const index_t nvar = n + 3 * md;

  QpProblem<double> p;
  std::vector<detail::Triplet> pt;
  for (index_t i = 0; i < md; ++i) pt.push_back({n + i, n + i, 2.0});
  p.p_upper = detail::csr_from_triplets(nvar, nvar, pt);
  p.q.assign(nvar, 0.0);
  for (index_t i = 0; i < md; ++i) {
    p.q[n + md + i] = 2.0 * m_huber;
    p.q[n + 2 * md + i] = 2.0 * m_huber;
  }

  std::vector<detail::Triplet> at;
  p.l.assign(3 * md, 0.0);
  p.u.assign(3 * md, 0.0);
  for (index_t i = 0; i < md; ++i) {
    for (index_t k = a_data.row_ptr[i]; k < a_data.row_ptr[i + 1]; ++k) {
      at.push_back({i, a_data.col_indices[k], a_data.values[k]});
    }
    at.push_back({i, n + i, -1.0});
    at.push_back({i, n + md + i, -1.0});
    at.push_back({i, n + 2 * md + i, 1.0});
    p.l[i] = b_data[i];
    p.u[i] = b_data[i];
  }
  for (index_t i = 0; i < md; ++i) {
    at.push_back({md + i, n + md + i, 1.0});
    p.l[md + i] = 0.0;
    p.u[md + i] = detail::kInf;
  }
  for (index_t i = 0; i < md; ++i) {
    at.push_back({2 * md + i, n + 2 * md + i, 1.0});
    p.l[2 * md + i] = 0.0;
    p.u[2 * md + i] = detail::kInf;
  }
  p.a = detail::csr_from_triplets(3 * md, nvar, at);
  return p;
}

// Lasso over (x, y, t): minimize y'y + lambda 1't with y = Ax - b and
// -t <= x <= t.
inline QpProblem<double> make_lasso_qp(const CsrMatrix<double>& a_data,
                                       const std::vector<double>& b_data,
                                       double lambda) {
  const index_t md = a_data.rows;
  const index_t n = a_data.cols;
  const index_t nvar = n + md + n;
  const index_t t_offset = n + md;

  QpProblem<double> p;
  std::vector<detail::Triplet> pt;
  for (index_t i = 0; i < md; ++i) pt.push_back({n + i, n + i, 2.0});
  p.p_upper = detail::csr_from_triplets(nvar, nvar, pt);
  p.q.assign(nvar, 0.0);
  for (index_t j = 0; j < n; ++j) p.q[t_offset + j] = lambda;

  std::vector<detail::Triplet> at;
  const index_t m = md + 2 * n;
  p.l.assign(m, 0.0);
  p.u.assign(m, 0.0);
  for (index_t i = 0; i < md; ++i) {
    for (index_t k = a_data.row_ptr[i]; k < a_data.row_ptr[i + 1]; ++k) {
      at.push_back({i, a_data.col_indices[k], a_data.values[k]});
    }
    at.push_back({i, n + i, -1.0});
    p.l[i] = b_data[i];
    p.u[i] = b_data[i];
  }
  for (index_t j = 0; j < n; ++j) {  // x_j - t_j <= 0
    at.push_back({md + j, j, 1.0});
    at.push_back({md + j, t_offset + j, -1.0});
    p.l[md + j] = -detail::kInf;
    p.u[md + j] = 0.0;
  }
  for (index_t j = 0; j < n; ++j) {  // x_j + t_j >= 0
    at.push_back({md + n + j, j, 1.0});
    at.push_back({md + n + j, t_offset + j, 1.0});
    p.l[md + n + j] = 0.0;
    p.u[md + n + j] = detail::kInf;
  }
  p.a = detail::csr_from_triplets(m, nvar, at);
  return p;
}

// Markowitz portfolio with factor risk model Sigma = F F' + diag(d),
// minimizing gamma (x'diag(d)x + w'w) - mu'x over (x, w) with w = F'x,
// 1'x = 1, x >= 0. f_t is F' (factors by assets).
inline QpProblem<double> make_portfolio_qp(const CsrMatrix<double>& f_t,
                                           const std::vector<double>& d_diag,
                                           const std::vector<double>& mu,
                                           double gamma) {
  const index_t k = f_t.rows;
  const index_t n = f_t.cols;
  const index_t nvar = n + k;

  QpProblem<double> p;
  std::vector<detail::Triplet> pt;
  for (index_t j = 0; j < n; ++j) {
    if (d_diag[j] != 0.0) pt.push_back({j, j, 2.0 * gamma * d_diag[j]});
  }
  for (index_t i = 0; i < k; ++i) pt.push_back({n + i, n + i, 2.0 * gamma});
  p.p_upper = detail::csr_from_triplets(nvar, nvar, pt);
  p.q.assign(nvar, 0.0);
  for (index_t j = 0; j < n; ++j) p.q[j] = -mu[j];

  std::vector<detail::Triplet> at;
  const index_t m = 1 + k + n;
  p.l.assign(m, 0.0);
  p.u.assign(m, 0.0);
  for (index_t j = 0; j < n; ++j) at.push_back({0, j, 1.0});  // budget
  p.l[0] = 1.0;
  p.u[0] = 1.0;
  for (index_t i = 0; i < k; ++i) {  // F'x - w = 0
    for (index_t kk = f_t.row_ptr[i]; kk < f_t.row_ptr[i + 1]; ++kk) {
      at.push_back({1 + i, f_t.col_indices[kk], f_t.values[kk]});
    }
    at.push_back({1 + i, n + i, -1.0});
  }
  for (index_t j = 0; j < n; ++j) {  // x >= 0
    at.push_back({1 + k + j, j, 1.0});
    p.l[1 + k + j] = 0.0;
    p.u[1 + k + j] = detail::kInf;
  }
  p.a = detail::csr_from_triplets(m, nvar, at);
  return p;
}

// Hinge-loss SVM over (x, t): minimize x'x + lambda 1't with
// t >= diag(labels) A x + 1 and t >= 0.
inline QpProblem<double> make_svm_qp(const CsrMatrix<double>& a_data,
                                     const std::vector<double>& labels,
                                     double lambda) {
  const index_t md = a_data.rows;
  const index_t n = a_data.cols;
  const index_t nvar = n + md;

  QpProblem<double> p;
  std::vector<detail::Triplet> pt;
  for (index_t j = 0; j < n; ++j) pt.push_back({j, j, 2.0});
  p.p_upper = detail::csr_from_triplets(nvar, nvar, pt);
  p.q.assign(nvar, 0.0);
  for (index_t i = 0; i < md; ++i) p.q[n + i] = lambda;

  std::vector<detail::Triplet> at;
  const index_t m = 2 * md;
  p.l.assign(m, 0.0);
  p.u.assign(m, 0.0);
  for (index_t i = 0; i < md; ++i) {  // b_i a_i'x - t_i <= -1
    for (index_t k = a_data.row_ptr[i]; k < a_data.row_ptr[i + 1]; ++k) {
      at.push_back({i, a_data.col_indices[k], labels[i] * a_data.values[k]});
    }
    at.push_back({i, n + i, -1.0});
    p.l[i] = -detail::kInf;
    p.u[i] = -1.0;
  }
  for (index_t i = 0; i < md; ++i) {  // t >= 0
    at.push_back({md + i, n + i, 1.0});
    p.l[md + i] = 0.0;
    p.u[md + i] = detail::kInf;
  }
  p.a = detail::csr_from_triplets(m, nvar, at);
  return p;
}

// ---------------------------------------------------------------------------
// Random instances.
// ---------------------------------------------------------------------------

namespace detail {

inline CounterRng rng_for(const BenchSpec& spec) {
  return CounterRng(derive_key({static_cast<std::uint64_t>(spec.problem_class),
                                spec.scale_index, spec.seed}));
}

}  // namespace detail

template <typename T>
QpProblem<T> gen_control(const BenchSpec& spec) {
  CounterRng rng = detail::rng_for(spec);
  const double target = static_cast<double>(target_nnz(spec.scale_index));
  const index_t nx =
      std::max<index_t>(2, static_cast<index_t>(std::lround(
                               std::sqrt(target / 15.0))));
  const index_t nu = std::max<index_t>(1, nx / 2);
  const index_t horizon = 10;

  std::vector<double> a_dyn(static_cast<std::size_t>(nx) * nx);
  for (double& v : a_dyn) v = rng.normal();
  double row_sum_norm = 0.0;
  for (index_t i = 0; i < nx; ++i) {
    double s = 0.0;
    for (index_t j = 0; j < nx; ++j) s += std::abs(a_dyn[i * nx + j]);
    row_sum_norm = std::max(row_sum_norm, s);
  }
  if (row_sum_norm > 0.0) {
    for (double& v : a_dyn) v *= 0.95 / row_sum_norm;
  }
  std::vector<double> b_in(static_cast<std::size_t>(nx) * nu);
  for (double& v : b_in) v = rng.normal();
  std::vector<double> q_diag(nx), qt_diag(nx), r_diag(nu), x_init(nx);
  for (double& v : q_diag) v = rng.uniform(0.1, 2.0);
  for (double& v : qt_diag) v = rng.uniform(0.1, 2.0);
  for (double& v : r_diag) v = rng.uniform(0.1, 1.0);
  const double x_bound = rng.uniform(1.0, 3.0);
  const double u_bound = rng.uniform(0.5, 2.0);
  for (double& v : x_init) v = rng.uniform(-0.5, 0.5) * x_bound;

  return detail::cast_problem<T>(make_control_qp(
      a_dyn, b_in, q_diag, r_diag, qt_diag, x_init, x_bound, u_bound, horizon));
}

template <typename T>
QpProblem<T> gen_equality(const BenchSpec& spec) {
  CounterRng rng = detail::rng_for(spec);
  const double target = static_cast<double>(target_nnz(spec.scale_index));
  const index_t n =
      std::max<index_t>(4, static_cast<index_t>(std::lround(
                               std::sqrt(target / 0.075))));
  const index_t rows = std::max<index_t>(1, n / 2);

  CsrMatrix<double> p_upper = detail::gram_psd_upper(rng, n, n, 3, 0.1);
  std::vector<double> q(n);
  for (double& v : q) v = rng.normal();
  CsrMatrix<double> a = detail::sample_sparse(rng, rows, n, 0.15);
  std::vector<double> x0(n);
  for (double& v : x0) v = rng.normal();
  const std::vector<double> b = spmv(a, x0);

  return detail::cast_problem<T>(make_equality_qp(p_upper, q, a, b));
}

template <typename T>
QpProblem<T> gen_huber(const BenchSpec& spec) {
  CounterRng rng = detail::rng_for(spec);
  const double target = static_cast<double>(target_nnz(spec.scale_index));
  const index_t n =
      std::max<index_t>(4, static_cast<index_t>(std::lround(
                               std::sqrt(target / 0.3))));
  const index_t md = 2 * n;

  CsrMatrix<double> a_data = detail::sample_sparse(rng, md, n, 0.15);
  std::vector<double> x_true(n);
  for (double& v : x_true) v = rng.normal();
  std::vector<double> b = spmv(a_data, x_true);
  for (double& v : b) v += 0.01 * rng.normal();
  for (double& v : b) {
    if (rng.bernoulli(0.1)) {
      v += (rng.bernoulli(0.5) ? 1.0 : -1.0) * rng.uniform(5.0, 10.0);
    }
  }
  return detail::cast_problem<T>(make_huber_qp(a_data, b, 1.0));
}

template <typename T>
QpProblem<T> gen_lasso(const BenchSpec& spec) {
  CounterRng rng = detail::rng_for(spec);
  const double target = static_cast<double>(target_nnz(spec.scale_index));
  const index_t n =
      std::max<index_t>(4, static_cast<index_t>(std::lround(
                               std::sqrt(target / 0.3))));
  const index_t md = 2 * n;

  CsrMatrix<double> a_data = detail::sample_sparse(rng, md, n, 0.15);
  std::vector<double> x_true(n, 0.0);
  for (double& v : x_true) {
    if (rng.bernoulli(0.1)) v = rng.normal();
  }
  std::vector<double> b = spmv(a_data, x_true);
  for (double& v : b) v += 0.01 * rng.normal();

  const CsrMatrix<double> a_t = transpose_csr(a_data);
  const double lambda = inf_norm(spmv(a_t, b)) / 5.0;
  return detail::cast_problem<T>(make_lasso_qp(a_data, b, lambda));
}

template <typename T>
QpProblem<T> gen_portfolio(const BenchSpec& spec) {
  CounterRng rng = detail::rng_for(spec);
  const double target = static_cast<double>(target_nnz(spec.scale_index));
  const index_t n =
      std::max<index_t>(4, static_cast<index_t>(std::lround(
                               std::sqrt(target * 200.0))));
  const index_t k = std::max<index_t>(1, n / 100);

  CsrMatrix<double> f_t = detail::sample_sparse(rng, k, n, 0.5);
  std::vector<double> d_diag(n), mu(n);
  for (double& v : d_diag) v = rng.uniform(0.0, std::sqrt(double(k)));
  for (double& v : mu) v = rng.normal();
  return detail::cast_problem<T>(make_portfolio_qp(f_t, d_diag, mu, 1.0));
}

template <typename T>
QpProblem<T> gen_random_qp(const BenchSpec& spec) {
  CounterRng rng = detail::rng_for(spec);
  const double target = static_cast<double>(target_nnz(spec.scale_index));
  const index_t n =
      std::max<index_t>(4, static_cast<index_t>(std::lround(
                               std::sqrt(target / 1.5))));
  const index_t m = 10 * n;

  QpProblem<double> p;
  p.p_upper = detail::gram_psd_upper(rng, n, n, 3, 0.1);
  p.q.resize(n);
  for (double& v : p.q) v = rng.normal();
  p.a = detail::sample_sparse(rng, m, n, 0.15);
  std::vector<double> x0(n);
  for (double& v : x0) v = rng.normal();
  const std::vector<double> ax0 = spmv(p.a, x0);
  p.l.resize(m);
  p.u.resize(m);
  for (index_t i = 0; i < m; ++i) {
    p.l[i] = ax0[i] - rng.uniform(0.05, 1.05);
    p.u[i] = ax0[i] + rng.uniform(0.05, 1.05);
  }
  return detail::cast_problem<T>(p);
}

template <typename T>
QpProblem<T> gen_svm(const BenchSpec& spec) {
  CounterRng rng = detail::rng_for(spec);
  const double target = static_cast<double>(target_nnz(spec.scale_index));
  const index_t n =
      std::max<index_t>(4, static_cast<index_t>(std::lround(
                               std::sqrt(target / 0.3))));
  const index_t md = 2 * n;

  const double shift = 1.0 / std::sqrt(0.15 * double(n));
  std::vector<double> labels(md);
  std::vector<detail::Triplet> t;
  for (index_t i = 0; i < md; ++i) {
    labels[i] = i < md / 2 ? 1.0 : -1.0;
    for (index_t c = 0; c < n; ++c) {
      if (rng.bernoulli(0.15)) {
        t.push_back({i, c, labels[i] * shift + rng.normal()});
      }
    }
  }
  const CsrMatrix<double> a_data = detail::csr_from_triplets(md, n, t);
  return detail::cast_problem<T>(make_svm_qp(a_data, labels, 1.0));
}

template <typename T>
QpProblem<T> generate(const BenchSpec& spec) {
  switch (spec.problem_class) {
    case ProblemClass::kControl: return gen_control<T>(spec);
    case ProblemClass::kEquality: return gen_equality<T>(spec);
    case ProblemClass::kHuber: return gen_huber<T>(spec);
    case ProblemClass::kLasso: return gen_lasso<T>(spec);
    case ProblemClass::kPortfolio: return gen_portfolio<T>(spec);
    case ProblemClass::kRandom: return gen_random_qp<T>(spec);
    case ProblemClass::kSvm: return gen_svm<T>(spec);
  }
  throw std::invalid_argument("generate: unknown problem class");
}

}  // namespace qpcg::bench

#endif  // QPCG_BENCH_GENERATORS_HPP
