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

#include "fogcolony/evolve.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace fogcolony {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_probability(double p, const char* name) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

// Runs fn(i) for i in [0, count) over `threads` workers on contiguous
// chunks. Each index writes only its own slot, so results are identical
// for any thread count.
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::mutex error_mutex;
  const int chunk = (count + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    const int begin = w * chunk;
    const int end = std::min(count, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&, begin, end] {
      try {
        for (int i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& worker : workers) worker.join();
  if (error) std::rethrow_exception(error);
}

void rank_population(std::vector<Individual>& pop) {
  std::vector<ObjectiveVector> points;
  points.reserve(pop.size());
  for (const auto& ind : pop) points.push_back(ind.objectives);
  const auto fronts = fast_nondominated_sort(points);
  for (std::size_t f = 0; f < fronts.size(); ++f) {
    std::vector<ObjectiveVector> front_points;
    front_points.reserve(fronts[f].size());
    for (int idx : fronts[f]) front_points.push_back(points[idx]);
    const auto crowd = crowding_distance(front_points);
    for (std::size_t i = 0; i < fronts[f].size(); ++i) {
      pop[fronts[f][i]].front_rank = static_cast<int>(f) + 1;
      pop[fronts[f][i]].crowding = crowd[i];
    }
  }
}

GenerationTrace trace_of(int generation, const std::vector<Individual>& pop) {
  GenerationTrace trace;
  trace.generation = generation;
  trace.objectives.reserve(pop.size());
  for (const auto& ind : pop) trace.objectives.push_back(ind.objectives);
  for (int i = 0; i < static_cast<int>(pop.size()); ++i) {
    if (pop[i].front_rank == 1) trace.front.push_back(i);
  }
  return trace;
}

}  // namespace

void GAConfig::validate() const {
  if (pop_size < 2 || pop_size % 2 != 0) {
    throw std::invalid_argument("pop_size must be even and >= 2");
  }
  if (gen_num < 0) throw std::invalid_argument("gen_num must be >= 0");
  check_probability(p_cross, "p_cross");
  check_probability(p_mut, "p_mut");
  check_probability(p_mut_join, "p_mut_join");
  check_probability(p_mut_split, "p_mut_split");
  check_probability(p_rep_agg, "p_rep_agg");
  check_probability(split_prob_init, "split_prob_init");
  if (std::abs(p_mut_join + p_mut_split - 1.0) > 1e-12) {
    throw std::invalid_argument("p_mut_join + p_mut_split must equal 1");
  }
}

std::vector<std::vector<int>> fast_nondominated_sort(const std::vector<ObjectiveVector>& points) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<int>> dominated(n);
  std::vector<int> domination_count(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (dominates(points[i], points[j])) dominated[i].push_back(j);
      else if (dominates(points[j], points[i])) domination_count[i] += 1;
    }
  }
  std::vector<std::vector<int>> fronts;
  std::vector<int> current;
  for (int i = 0; i < n; ++i) {
    if (domination_count[i] == 0) current.push_back(i);
  }
  while (!current.empty()) {
    fronts.push_back(current);
    std::vector<int> next;
    for (int i : current) {
      for (int j : dominated[i]) {
        if (--domination_count[j] == 0) next.push_back(j);
      }
    }
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& front) {
  const int n = static_cast<int>(front.size());
  if (n == 0) throw std::invalid_argument("crowding_distance needs a non-empty front");
  std::vector<double> crowd(n, 0.0);
  std::vector<int> order(n);
  auto accumulate = [&](auto objective) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return objective(front[a]) < objective(front[b]); });
    const double lo = objective(front[order.front()]);
    const double hi = objective(front[order.back()]);
    crowd[order.front()] = kInf;
    crowd[order.back()] = kInf;
    if (hi == lo) return;  // degenerate objective adds nothing
    for (int i = 1; i + 1 < n; ++i) {
      crowd[order[i]] +=
          (objective(front[order[i + 1]]) - objective(front[order[i - 1]])) / (hi - lo);
    }
  };
  accumulate([](const ObjectiveVector& o) { return o.response_time; });
  accumulate([](const ObjectiveVector& o) { return o.placement_time; });
  return crowd;
}

int binary_tournament(const std::vector<Individual>& population, std::mt19937_64& rng) {
  if (population.empty()) throw std::invalid_argument("empty population");
  std::uniform_int_distribution<int> pick(0, static_cast<int>(population.size()) - 1);
  const int first = pick(rng);
  const int second = pick(rng);
  const Individual& a = population[first];
  const Individual& b = population[second];
  if (a.front_rank != b.front_rank) return a.front_rank < b.front_rank ? first : second;
  if (a.crowding != b.crowding) return a.crowding > b.crowding ? first : second;
  return first;
}

GAResult run_nsga2(const EvalContext& ctx, const GAConfig& cfg, int threads) {
  cfg.validate();
  std::mt19937_64 rng(cfg.master_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto evaluate_batch = [&](std::vector<Individual>& batch) {
    parallel_for(static_cast<int>(batch.size()), threads, [&](int i) {
      batch[i].objectives =
          evaluate_layout(batch[i].chromosome.selected_nodes(), ctx).objectives;
    });
  };

  std::vector<Individual> population(cfg.pop_size);
  for (auto& ind : population) {
    ind.chromosome = random_layout(ctx.dendro, cfg.split_prob_init, rng);
  }
  evaluate_batch(population);
  rank_population(population);

  GAResult result;
  result.traces.push_back(trace_of(0, population));

  for (int gen = 1; gen <= cfg.gen_num; ++gen) {
    std::vector<Individual> offspring;
    offspring.reserve(cfg.pop_size);
    for (int pair = 0; pair < cfg.pop_size / 2; ++pair) {
      const bool cross = unit(rng) < cfg.p_cross;
      const Individual& father1 = population[binary_tournament(population, rng)];
      const Individual& father2 = population[binary_tournament(population, rng)];
      Chromosome child1;
      Chromosome child2;
      if (cross) {
        std::tie(child1, child2) =
            crossover_subtree(father1.chromosome, father2.chromosome, ctx.dendro, rng);
      } else {
        child1 = father1.chromosome;
        child2 = father2.chromosome;
      }
      if (unit(rng) < cfg.p_mut) {
        if (unit(rng) < cfg.p_mut_join) {
          child1 = mutate_join(std::move(child1), ctx.dendro, rng);
          child2 = mutate_join(std::move(child2), ctx.dendro, rng);
        } else {
          child1 = mutate_split(std::move(child1), ctx.dendro, rng);
          child2 = mutate_split(std::move(child2), ctx.dendro, rng);
        }
      }
      if (unit(rng) < cfg.p_rep_agg) {
        child1 = repair_agglomerative(std::move(child1), ctx.dendro);
        child2 = repair_agglomerative(std::move(child2), ctx.dendro);
      } else {
        child1 = repair_divisive(std::move(child1), ctx.dendro);
        child2 = repair_divisive(std::move(child2), ctx.dendro);
      }
      offspring.push_back({std::move(child1), {}, 0, 0.0});
      offspring.push_back({std::move(child2), {}, 0, 0.0});
    }
    evaluate_batch(offspring);

    // Elitist union-sort-truncate.
    std::vector<Individual> merged = std::move(offspring);
    merged.insert(merged.end(), population.begin(), population.end());
    rank_population(merged);
    std::stable_sort(merged.begin(), merged.end(), [](const Individual& a, const Individual& b) {
      if (a.front_rank != b.front_rank) return a.front_rank < b.front_rank;
      return a.crowding > b.crowding;
    });
    merged.resize(cfg.pop_size);
    population = std::move(merged);

    result.traces.push_back(trace_of(gen, population));
  }

  for (const auto& ind : population) {
    if (ind.front_rank == 1) result.front.push_back(ind);
  }
  result.population = std::move(population);
  return result;
}

std::pair<std::vector<int>, Evaluation> baseline_one_colony(const EvalContext& ctx) {
  const std::vector<int> layout = {ctx.dendro.root};
  return {layout, evaluate_layout(layout, ctx)};
}

std::pair<std::vector<int>, Evaluation> baseline_fixed_size(const EvalContext& ctx,
                                                            int target_size) {
  if (target_size < 1) throw std::invalid_argument("target colony size must be >= 1");
  std::vector<int> layout;
  std::vector<int> stack = {ctx.dendro.root};
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    const auto& colony = ctx.dendro.node(node);
    if (!colony.children || static_cast<int>(colony.devices.size()) <= target_size) {
      layout.push_back(node);
    } else {
      stack.push_back(colony.children->second);
      stack.push_back(colony.children->first);
    }
  }
  std::sort(layout.begin(), layout.end());
  return {layout, evaluate_layout(layout, ctx)};
}

}  // namespace fogcolony
