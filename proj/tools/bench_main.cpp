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

// Benchmark harness CLI.
//
//   bench run --classes control,svm --scales 1..8 --seeds 10 --out out.csv
//             [--settings file] [--precision single|double] [--threads k]
//             [--base-seed s]
//   bench gen --class lasso --scale 3 --seed 7 --out problem.txt

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpcg/qpcg.hpp"

namespace {

std::vector<qpcg::index_t> parse_scales(const std::string& text) {
  std::vector<qpcg::index_t> scales;
  const auto range_pos = text.find("..");
  if (range_pos != std::string::npos) {
    const int lo = std::stoi(text.substr(0, range_pos));
    const int hi = std::stoi(text.substr(range_pos + 2));
    if (lo < 0 || hi < lo) throw std::invalid_argument("bad scale range");
    for (int s = lo; s <= hi; ++s) {
      scales.push_back(static_cast<qpcg::index_t>(s));
    }
    return scales;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    scales.push_back(static_cast<qpcg::index_t>(std::stoi(item)));
  }
  if (scales.empty()) throw std::invalid_argument("no scales given");
  return scales;
}

std::vector<qpcg::bench::ProblemClass> parse_classes(const std::string& text) {
  if (text == "all") return qpcg::bench::all_classes();
  std::vector<qpcg::bench::ProblemClass> classes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    classes.push_back(qpcg::bench::class_from_string(item));
  }
  return classes;
}

template <typename T>
int run_sweep(const qpcg::bench::SweepOptions& opts,
              const std::string& settings_path, const std::string& out_path) {
  qpcg::Settings<T> settings;
  if (!settings_path.empty()) {
    settings = qpcg::load_settings<T>(settings_path);
  }
  const auto records = qpcg::bench::run_benchmark(opts, settings);
  std::ofstream os(out_path);
  if (!os) {
    std::cerr << "error: cannot open " << out_path << '\n';
    return 1;
  }
  qpcg::bench::write_csv(os, records);
  std::cerr << "wrote " << records.size() << " records to " << out_path
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qpcg benchmark harness"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "generate, solve, and time a sweep");
  std::string classes_text = "all";
  std::string scales_text = "1..4";
  int seeds = 10;
  std::uint64_t base_seed = 0;
  unsigned threads = 1;
  std::string settings_path;
  std::string out_path;
  std::string precision = "double";
  run->add_option("--classes", classes_text,
                  "comma-separated classes or 'all'");
  run->add_option("--scales", scales_text, "scale list '1,3' or range '1..8'");
  run->add_option("--seeds", seeds, "instances per size")
      ->check(CLI::PositiveNumber);
  run->add_option("--base-seed", base_seed, "first instance seed");
  run->add_option("--threads", threads, "worker threads");
  run->add_option("--settings", settings_path, "settings file (flat JSON)");
  run->add_option("--out", out_path, "output CSV path")->required();
  run->add_option("--precision", precision, "single or double")
      ->check(CLI::IsMember({"single", "double"}));

  auto* gen = app.add_subcommand("gen", "write one instance as a text file");
  std::string class_text;
  int scale = 1;
  std::uint64_t seed = 0;
  std::string gen_out;
  gen->add_option("--class", class_text, "problem class")->required();
  gen->add_option("--scale", scale, "scale index")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed, "instance seed");
  gen->add_option("--out", gen_out, "output problem path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      qpcg::bench::SweepOptions opts;
      opts.classes = parse_classes(classes_text);
      opts.scales = parse_scales(scales_text);
      opts.instances_per_size = static_cast<qpcg::index_t>(seeds);
      opts.base_seed = base_seed;
      opts.threads = threads;
      if (precision == "single") {
        return run_sweep<float>(opts, settings_path, out_path);
      }
      return run_sweep<double>(opts, settings_path, out_path);
    }
    // gen
    qpcg::bench::BenchSpec spec;
    spec.problem_class = qpcg::bench::class_from_string(class_text);
    spec.scale_index = static_cast<qpcg::index_t>(scale);
    spec.seed = seed;
    const auto problem = qpcg::bench::generate<double>(spec);
    qpcg::save_problem(gen_out, problem);
    std::cerr << "wrote " << gen_out << " (n=" << problem.num_vars()
              << ", m=" << problem.num_constraints() << ", N="
              << problem.p_upper.nnz() + problem.a.nnz() << ")\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
