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

// One-shot solver: reads a problem in the text format, solves it, prints a
// single JSON summary record to stdout.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpcg/qpcg.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qpcg one-shot QP solve"};
  std::string problem_path;
  std::string settings_path;
  app.add_option("--problem", problem_path, "problem file (text format)")
      ->required();
  app.add_option("--settings", settings_path, "settings file (flat JSON)");
  CLI11_PARSE(app, argc, argv);

  try {
    const auto problem = qpcg::load_problem<double>(problem_path);
    qpcg::Settings<double> settings;
    if (!settings_path.empty()) {
      settings = qpcg::load_settings<double>(settings_path);
    }
    const auto out = qpcg::solve(problem, settings);

    nlohmann::json record{
        {"status", qpcg::to_string(out.status)},
        {"iterations", out.iterations},
        {"pcg_iterations_total", out.pcg_iterations_total},
        {"runtime_seconds", out.runtime_seconds},
        {"r_prim_inf", out.r_prim_inf},
        {"r_dual_inf", out.r_dual_inf},
        {"objective", out.objective},
    };
    std::cout << record.dump() << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
