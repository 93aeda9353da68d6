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

#ifndef FOGCOLONY_SCENARIO_HPP
#define FOGCOLONY_SCENARIO_HPP

#include <iosfwd>
#include <memory>
#include <string>

#include "fogcolony/evolve.hpp"
#include "fogcolony/metrics.hpp"

namespace fogcolony {

/// Full configuration of one experiment. Defaults reproduce the reference
/// setup (100-device Barabasi-Albert infrastructure, 20 applications,
/// population 100), so an empty config file is a valid experiment.
struct ScenarioConfig {
  TopologyParams infra;
  WorkloadParams workload;
  GAConfig ga;
  FitnessMode mode = FitnessMode::kCostModel;
  std::uint64_t seed = 1;
  int fixed_colony_size = 5;
  std::string output_dir = "results/run";

  void validate() const;
};

/// Parses the INI-style key/value config (sections [infrastructure],
/// [application], [user], [genetic], [experiment]); unknown keys and
/// malformed lines raise std::runtime_error naming the offending line.
ScenarioConfig parse_config_text(std::istream& in, const std::string& source_name);
ScenarioConfig load_config(const std::string& path);

/// A generated problem instance: the infrastructure plus its workload.
struct Scenario {
  Infrastructure infra;
  Workload workload;
};

Scenario generate_scenario(const ScenarioConfig& config);

/// Plain-text scenario file (devices, links, apps, services, requests,
/// users, cloud latency); byte-stable so reruns can be diffed.
std::string serialize_scenario(const Scenario& scenario);
Scenario parse_scenario(std::istream& in);
void save_scenario(const Scenario& scenario, const std::string& path);
Scenario load_scenario(const std::string& path);

/// Owns a scenario and every derived structure evaluations need (dendrogram
/// with coordinators, distance tables). The starting point for GA runs,
/// baselines and one-off layout evaluations.
class Study {
 public:
  Study(Scenario scenario, FitnessMode mode = FitnessMode::kCostModel);

  const Scenario& scenario() const { return scenario_; }
  const Infrastructure& infra() const { return scenario_.infra; }
  const Workload& workload() const { return scenario_.workload; }
  const Dendrogram& dendrogram() const { return dendro_; }
  const DistanceTable& distances() const { return distances_; }
  EvalContext context() const;

  Evaluation evaluate(const std::vector<int>& layout_nodes) const;
  Evaluation evaluate_chromosome(const Chromosome& chromosome) const;
  GAResult run(const GAConfig& config, int threads = 1) const;
  std::pair<std::vector<int>, Evaluation> one_colony() const;
  std::pair<std::vector<int>, Evaluation> fixed_size(int target_size) const;

 private:
  Scenario scenario_;
  FitnessMode mode_;
  Dendrogram dendro_;
  DistanceTable distances_;
  std::unique_ptr<ColonyDistanceCache> colony_distances_;
};

struct ExperimentResult {
  ScenarioConfig config;
  ObjectiveVector one_colony;
  ObjectiveVector fixed_size;
  std::vector<GenerationTrace> traces;
  std::vector<Individual> front;
  FrontSummary summary;
  std::string directory;
};

/// Runs the complete experiment (scenario generation, both baselines, the
/// GA) and persists scenario.txt, trace.csv, result.json and metrics.csv
/// under config.output_dir. Refuses to overwrite an existing result unless
/// `force` is set.
ExperimentResult run_experiment(const ScenarioConfig& config, int threads = 1, bool force = false);

/// Writes per-generation scatter files (and optional SVG plots) for a
/// persisted result directory.
void export_plot_data(const std::string& result_dir, bool svg = false);

/// Recomputes the metrics summary from a persisted result directory.
FrontSummary metrics_from_result(const std::string& result_dir);

/// Stable text for doubles: round-trippable and byte-identical across runs.
std::string format_double(double value);

/// Splitmix-style derivation of per-purpose seeds from the experiment seed
/// (stream 1: topology, 2: workload, 3: the GA).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace fogcolony

#endif  // FOGCOLONY_SCENARIO_HPP
