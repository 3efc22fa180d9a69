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

// Counter-based pseudo-random generator for reproducible benchmark data.
// Draw i from stream `key` is
//
//   mix(key + i * 0x9E3779B97F4A7C15)
//
// where mix is the 64-bit finalizer
//
//   z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27;  z *= 0x94D049BB133111EB;
//   z ^= z >> 31;
//
// (the splitmix64 constants). Uniform doubles take the top 53 bits; normals
// use the Box-Muller transform and consume exactly two uniforms each. Stream
// keys are derived by folding words through the same mixer, so any
// implementation of these constants reproduces the data exactly.

#ifndef QPCG_BENCH_RNG_HPP
#define QPCG_BENCH_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace qpcg::bench {

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

inline std::uint64_t derive_key(std::initializer_list<std::uint64_t> words) {
  std::uint64_t key = 0;
  for (std::uint64_t w : words) {
    key = mix64(key ^ (w + 0x9E3779B97F4A7C15ULL));
  }
  return key;
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() {
    return mix64(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL);
  }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal; consumes exactly two uniform draws.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
  }

  // Uniform integer in [0, bound); bound must be positive. The modulo bias
  // is negligible for the small bounds used here.
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace qpcg::bench

#endif  // QPCG_BENCH_RNG_HPP
