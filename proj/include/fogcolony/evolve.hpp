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

#ifndef FOGCOLONY_EVOLVE_HPP
#define FOGCOLONY_EVOLVE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "fogcolony/fitness.hpp"
#include "fogcolony/layout.hpp"

namespace fogcolony {

struct Individual {
  Chromosome chromosome;
  ObjectiveVector objectives;
  int front_rank = 0;      // 1 is the Pareto front
  double crowding = 0.0;
};

struct GAConfig {
  int pop_size = 100;
  int gen_num = 100;
  double p_cross = 0.95;
  double p_mut = 0.3;
  double p_mut_join = 0.5;
  double p_mut_split = 0.5;
  double p_rep_agg = 0.5;
  double split_prob_init = 0.5;
  std::uint64_t master_seed = 1;

  /// Throws std::invalid_argument on out-of-range probabilities, an odd or
  /// non-positive population, or p_mut_join + p_mut_split != 1.
  void validate() const;
};

struct GenerationTrace {
  int generation = 0;
  std::vector<ObjectiveVector> objectives;  // whole population
  std::vector<int> front;                   // indices of rank-1 members
};

/// Deb's fast non-dominated sort (minimization): front k holds the points
/// non-dominated once fronts < k are removed. Returns index lists.
std::vector<std::vector<int>> fast_nondominated_sort(const std::vector<ObjectiveVector>& points);

/// NSGA-II crowding distance for one front: boundary members per objective
/// get +inf, interior members accumulate normalized neighbor gaps.
std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& front);

/// Draws two individuals uniformly with replacement; the lower front rank
/// wins, ties go to the larger crowding distance, then to the first draw.
/// Returns the winner's index.
int binary_tournament(const std::vector<Individual>& population, std::mt19937_64& rng);

struct GAResult {
  std::vector<Individual> population;  // final generation
  std::vector<Individual> front;       // rank-1 members of the final generation
  std::vector<GenerationTrace> traces; // generation 0 (initial) .. gen_num
};

/// The full NSGA-II loop: random initial population, tournament-selected
/// pairs combined by sub-tree crossover (cloned when the crossover coin
/// fails), join/split mutation, agglomerative-or-divisive repair, then
/// union-sort-truncate elitism. Offspring evaluation may run on several
/// threads; results do not depend on the thread count.
GAResult run_nsga2(const EvalContext& ctx, const GAConfig& cfg, int threads = 1);

/// Control algorithm: the single colony holding every device.
std::pair<std::vector<int>, Evaluation> baseline_one_colony(const EvalContext& ctx);

/// Control algorithm: top-down dendrogram cut into colonies of at most
/// target_size devices, evaluated with the same pipeline.
std::pair<std::vector<int>, Evaluation> baseline_fixed_size(const EvalContext& ctx,
                                                            int target_size);

}  // namespace fogcolony

#endif  // FOGCOLONY_EVOLVE_HPP
