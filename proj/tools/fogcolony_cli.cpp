// Copyright 2026 The fogcolonies Authors
//
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

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fogcolony/scenario.hpp"

namespace {

void print_summary(const fogcolony::ExperimentResult& result) {
  std::cout << "experiment " << result.config.infra.devices << "nodes"
            << result.config.workload.apps << "apps -> " << result.directory << "\n";
  std::cout << "  one-colony  rt=" << result.one_colony.response_time
            << " pt=" << result.one_colony.placement_time << "\n";
  std::cout << "  fixed-size  rt=" << result.fixed_size.response_time
            << " pt=" << result.fixed_size.placement_time << "\n";
  std::cout << "  front size " << result.front.size() << ", S=" << result.summary.s_metric
            << ", first dominating generation ";
  if (result.summary.first_dominating) std::cout << *result.summary.first_dominating;
  else std::cout << "never";
  std::cout << "\n  smallED rt=" << result.summary.small_ed.response_time
            << " pt=" << result.summary.small_ed.placement_time << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fog colony layout optimization: dendrogram-guided NSGA-II"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  std::string fitness_mode;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int generations = -1;
  int threads = 1;
  bool matrix = false;
  bool force = false;

  auto* run = app.add_subcommand("run", "Run an experiment (GA plus both control algorithms)");
  run->add_option("-c,--config", config_path, "INI config file; defaults reproduce the reference setup");
  run->add_option("-o,--out", output_dir, "Output directory (overrides config)");
  run->add_option("-s,--seed", seed, "Master seed (overrides config)")
      ->each([&](const std::string&) { seed_set = true; });
  run->add_option("-g,--generations", generations, "Generation count (overrides config)");
  run->add_option("-t,--threads", threads, "Evaluation threads (objectives are thread-count independent)");
  run->add_option("-m,--fitness-mode", fitness_mode, "cost-model (default) or wall-clock")
      ->check(CLI::IsMember({"cost-model", "wall-clock"}));
  run->add_flag("--matrix", matrix, "Run the 3x3 scenario grid {100,200,300} devices x {20,40,60} apps");
  run->add_flag("-f,--force", force, "Overwrite an existing result directory");

  std::string result_dir;
  bool svg = false;
  auto* export_cmd = app.add_subcommand("export", "Write per-generation scatter data for a result");
  export_cmd->add_option("result", result_dir, "Result directory")->required();
  export_cmd->add_flag("--svg", svg, "Also write an SVG scatter per generation");

  std::string metrics_dir;
  auto* metrics_cmd = app.add_subcommand("metrics", "Recompute front metrics for a result");
  metrics_cmd->add_option("result", metrics_dir, "Result directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      fogcolony::ScenarioConfig config;
      if (!config_path.empty()) config = fogcolony::load_config(config_path);
      if (seed_set) config.seed = seed;
      if (generations >= 0) config.ga.gen_num = generations;
      if (!output_dir.empty()) config.output_dir = output_dir;
      if (!fitness_mode.empty()) {
        config.mode = fitness_mode == "wall-clock" ? fogcolony::FitnessMode::kWallClock
                                                   : fogcolony::FitnessMode::kCostModel;
      }
      if (matrix) {
        const std::filesystem::path base(config.output_dir);
        for (int devices : {100, 200, 300}) {
          for (int apps : {20, 40, 60}) {
            fogcolony::ScenarioConfig cell = config;
            cell.infra.devices = devices;
            cell.workload.apps = apps;
            cell.output_dir =
                (base / (std::to_string(devices) + "nodes" + std::to_string(apps) + "apps"))
                    .string();
            print_summary(fogcolony::run_experiment(cell, threads, force));
          }
        }
      } else {
        print_summary(fogcolony::run_experiment(config, threads, force));
      }
    } else if (export_cmd->parsed()) {
      fogcolony::export_plot_data(result_dir, svg);
      std::cout << "wrote plot data under " << result_dir << "/plot\n";
    } else if (metrics_cmd->parsed()) {
      const auto summary = fogcolony::metrics_from_result(metrics_dir);
      std::cout << "S(GA) = " << summary.s_metric << "\n";
      for (const auto& [label, value] : summary.coverage_vs) {
        std::cout << "C(" << label << ") = " << value << "\n";
      }
      std::cout << "first dominating generation: ";
      if (summary.first_dominating) std::cout << *summary.first_dominating;
      else std::cout << "never";
      std::cout << "\nsmallED: rt=" << summary.small_ed.response_time
                << " pt=" << summary.small_ed.placement_time << "\n";
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
