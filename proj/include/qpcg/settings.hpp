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

#ifndef QPCG_SETTINGS_HPP
#define QPCG_SETTINGS_HPP

#include <stdexcept>
#include <string>

#include "qpcg/types.hpp"

namespace qpcg {

template <typename T>
struct Settings {
  T alpha = T(1.6);             // relaxation, in (0, 2)
  T sigma = T(1e-6);            // proximal regularization, > 0
  T rho_bar_init = T(0.1);      // initial penalty
  T eps_abs = T(1e-3);
  T eps_rel = T(1e-3);
  T eps_pinf = T(1e-4);         // primal infeasibility tolerance
  T eps_dinf = T(1e-4);         // dual infeasibility tolerance
  index_t max_admm_iter = 50000;
  index_t check_interval = 5;   // termination checks every this many iterations
  index_t rho_update_interval = 10;
  T lambda_pcg = T(0.15);       // adaptive PCG tolerance factor, in (0, 1)
  T eps_pcg_min = T(1e-7);      // PCG tolerance floor
  bool scaling_enabled = true;
  T eps_equil = T(1e-3);
  index_t equil_max_passes = 10;
  std::string precision_note;   // informational only
};

template <typename T>
void validate(const Settings<T>& s) {
  if (!(s.alpha > T(0)) || !(s.alpha < T(2))) {
    throw std::invalid_argument("settings: alpha must be in (0, 2)");
  }
  if (!(s.sigma > T(0))) {
    throw std::invalid_argument("settings: sigma must be positive");
  }
  if (!(s.rho_bar_init > T(0))) {
    throw std::invalid_argument("settings: rho_bar_init must be positive");
  }
  if (s.eps_abs < T(0) || s.eps_rel < T(0)) {
    throw std::invalid_argument("settings: tolerances must be >= 0");
  }
  if (!(s.eps_pinf > T(0)) || !(s.eps_dinf > T(0))) {
    throw std::invalid_argument(
        "settings: infeasibility tolerances must be positive");
  }
  if (s.max_admm_iter < 1 || s.check_interval < 1 ||
      s.rho_update_interval < 1) {
    throw std::invalid_argument("settings: iteration counts must be >= 1");
  }
  if (!(s.lambda_pcg > T(0)) || !(s.lambda_pcg < T(1))) {
    throw std::invalid_argument("settings: lambda_pcg must be in (0, 1)");
  }
  if (!(s.eps_pcg_min > T(0))) {
    throw std::invalid_argument("settings: eps_pcg_min must be positive");
  }
  if (!(s.eps_equil > T(0)) || s.equil_max_passes < 1) {
    throw std::invalid_argument("settings: bad equilibration parameters");
  }
}

}  // namespace qpcg

#endif  // QPCG_SETTINGS_HPP
