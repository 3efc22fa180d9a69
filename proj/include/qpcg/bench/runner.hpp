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

// Benchmark sweep: generates instances, solves them, and emits one record
// per instance plus a "mean" record per (class, scale) group. Timing covers
// the solve call only (equilibration included, generation and I/O excluded).
// Instances may be solved by a worker pool; records are assembled in
// (class, scale, instance) order regardless of completion order.

#ifndef QPCG_BENCH_RUNNER_HPP
#define QPCG_BENCH_RUNNER_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qpcg/bench/generators.hpp"
#include "qpcg/settings.hpp"
#include "qpcg/solver.hpp"

namespace qpcg::bench {

struct BenchRecord {
  std::string class_name;
  std::uint64_t N = 0;  // nnz(P upper) + nnz(A)
  index_t n = 0;
  index_t m = 0;
  std::string status;
  index_t iterations = 0;
  std::uint64_t pcg_total = 0;
  double runtime_seconds = 0.0;
  double r_prim_inf = 0.0;
  double r_dual_inf = 0.0;
};

inline std::string csv_header() {
  return "class_name,N,n,m,status,iterations,pcg_total,runtime_seconds,"
         "r_prim_inf,r_dual_inf";
}

inline std::string to_csv_row(const BenchRecord& r) {
  std::ostringstream os;
  os << r.class_name << ',' << r.N << ',' << r.n << ',' << r.m << ','
     << r.status << ',' << r.iterations << ',' << r.pcg_total << ','
     << std::setprecision(10) << r.runtime_seconds << ','
     << std::setprecision(10) << r.r_prim_inf << ',' << std::setprecision(10)
     << r.r_dual_inf;
  return os.str();
}

struct SweepOptions {
  std::vector<ProblemClass> classes;
  std::vector<index_t> scales;
  index_t instances_per_size = 10;
  std::uint64_t base_seed = 0;
  unsigned threads = 1;
};

template <typename T>
BenchRecord solve_one(const BenchSpec& spec, const Settings<T>& settings) {
  BenchRecord rec;
  rec.class_name = to_string(spec.problem_class);
  try {
    const QpProblem<T> p = generate<T>(spec);
    rec.N = static_cast<std::uint64_t>(p.p_upper.nnz()) + p.a.nnz();
    rec.n = p.num_vars();
    rec.m = p.num_constraints();
    const SolveOutcome<T> out = solve(p, settings);
    rec.status = to_string(out.status);
    rec.iterations = out.iterations;
    rec.pcg_total = out.pcg_iterations_total;
    rec.runtime_seconds = out.runtime_seconds;
    rec.r_prim_inf = static_cast<double>(out.r_prim_inf);
    rec.r_dual_inf = static_cast<double>(out.r_dual_inf);
  } catch (const std::exception&) {
    rec.status = "error";
  }
  return rec;
}

template <typename T>
std::vector<BenchRecord> run_benchmark(const SweepOptions& opts,
                                       const Settings<T>& settings) {
  std::vector<BenchSpec> tasks;
  for (ProblemClass cls : opts.classes) {
    for (index_t scale : opts.scales) {
      for (index_t i = 0; i < opts.instances_per_size; ++i) {
        BenchSpec spec;
        spec.problem_class = cls;
        spec.scale_index = scale;
        spec.seed = opts.base_seed + i;
        spec.instances_per_size = opts.instances_per_size;
        tasks.push_back(spec);
      }
    }
  }

  std::vector<BenchRecord> results(tasks.size());
  if (opts.threads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      results[i] = solve_one(tasks[i], settings);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        results[i] = solve_one(tasks[i], settings);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < opts.threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  // Interleave a mean record after each (class, scale) group.
  std::vector<BenchRecord> out;
  out.reserve(results.size() + results.size() / opts.instances_per_size + 1);
  std::size_t idx = 0;
  for (ProblemClass cls : opts.classes) {
    for (index_t scale : opts.scales) {
      (void)scale;
      BenchRecord mean;
      mean.class_name = to_string(cls);
      mean.status = "mean";
      double n_sum = 0, m_sum = 0, big_n_sum = 0, iter_sum = 0, pcg_sum = 0;
      for (index_t i = 0; i < opts.instances_per_size; ++i, ++idx) {
        const BenchRecord& r = results[idx];
        out.push_back(r);
        big_n_sum += static_cast<double>(r.N);
        n_sum += r.n;
        m_sum += r.m;
        iter_sum += r.iterations;
        pcg_sum += static_cast<double>(r.pcg_total);
        mean.runtime_seconds += r.runtime_seconds;
        mean.r_prim_inf += r.r_prim_inf;
        mean.r_dual_inf += r.r_dual_inf;
      }
      const double k = static_cast<double>(opts.instances_per_size);
      mean.N = static_cast<std::uint64_t>(std::llround(big_n_sum / k));
      mean.n = static_cast<index_t>(std::llround(n_sum / k));
      mean.m = static_cast<index_t>(std::llround(m_sum / k));
      mean.iterations = static_cast<index_t>(std::llround(iter_sum / k));
      mean.pcg_total = static_cast<std::uint64_t>(std::llround(pcg_sum / k));
      mean.runtime_seconds /= k;
      mean.r_prim_inf /= k;
      mean.r_dual_inf /= k;
      out.push_back(mean);
    }
  }
  return out;
}

inline void write_csv(std::ostream& os, const std::vector<BenchRecord>& recs) {
  os << csv_header() << '\n';
  for (const BenchRecord& r : recs) os << to_csv_row(r) << '\n';
}

}  // namespace qpcg::bench

#endif  // QPCG_BENCH_RUNNER_HPP
