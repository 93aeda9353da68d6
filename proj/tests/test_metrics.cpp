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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fogcolony/metrics.hpp"

using namespace fogcolony;

namespace {

// Independent O(|A||B|) coverage.
double brute_coverage(const std::vector<ObjectiveVector>& a,
                      const std::vector<ObjectiveVector>& b) {
  int covered = 0;
  for (const auto& y : b) {
    bool hit = false;
    for (const auto& x : a) {
      const bool weak = x.response_time <= y.response_time &&
                        x.placement_time <= y.placement_time;
      const bool strict =
          x.response_time < y.response_time || x.placement_time < y.placement_time;
      if (weak && strict) hit = true;
    }
    if (hit) ++covered;
  }
  return static_cast<double>(covered) / b.size();
}

// Hypervolume by area decomposition into disjoint vertical strips.
double brute_hypervolume(std::vector<ObjectiveVector> front, const ObjectiveVector& ref) {
  std::sort(front.begin(), front.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
    return a.response_time < b.response_time;
  });
  double area = 0.0;
  for (std::size_t i = 0; i < front.size(); ++i) {
    double best = ref.placement_time;
    for (std::size_t j = 0; j <= i; ++j) best = std::min(best, front[j].placement_time);
    const double right = i + 1 < front.size()
                             ? std::min(front[i + 1].response_time, ref.response_time)
                             : ref.response_time;
    const double left = std::min(front[i].response_time, right);
    area += (right - left) * (ref.placement_time - best);
  }
  return area;
}

}  // namespace

TEST_CASE("coverage examples and asymmetry") {
  CHECK(coverage({{1, 1}}, {{2, 2}, {0, 3}}) == doctest::Approx(0.5));
  // A strict antichain never covers itself.
  const std::vector<ObjectiveVector> antichain = {{0, 3}, {1, 2}, {2, 1}, {3, 0}};
  CHECK(coverage(antichain, antichain) == 0.0);
  CHECK_THROWS_AS((coverage(antichain, {})), std::invalid_argument);

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> value(0.0, 4.0);
  for (int round = 0; round < 40; ++round) {
    std::vector<ObjectiveVector> a(1 + rng() % 12), b(1 + rng() % 12);
    for (auto& p : a) p = {value(rng), value(rng)};
    for (auto& p : b) p = {value(rng), value(rng)};
    CHECK(coverage(a, b) == doctest::Approx(brute_coverage(a, b)));
    CHECK(coverage(b, a) == doctest::Approx(brute_coverage(b, a)));
  }
}

TEST_CASE("s_metric matches rectangle decompositions") {
  CHECK(s_metric({{0.5, 0.5}}, {1, 1}) == doctest::Approx(0.25));
  // Two overlapping rectangles: 0.16 + 0.16 minus the shared 0.04 corner.
  CHECK(s_metric({{0.2, 0.8}, {0.8, 0.2}}, {1, 1}) == doctest::Approx(0.28));
  CHECK(s_metric({{0.3, 1.0}, {1.0, 0.4}}, {1, 1}) == doctest::Approx(0.0));
  CHECK_THROWS_AS((s_metric({{1.2, 0.5}}, {1, 1})), std::invalid_argument);

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  for (int round = 0; round < 60; ++round) {
    std::vector<ObjectiveVector> front(1 + rng() % 10);
    for (auto& p : front) p = {value(rng), value(rng)};
    const ObjectiveVector ref{1.0, 1.0};
    CHECK(s_metric(front, ref) == doctest::Approx(brute_hypervolume(front, ref)).epsilon(1e-9));
  }
}

TEST_CASE("s_metric is monotone in non-dominated additions") {
  std::vector<ObjectiveVector> front = {{0.6, 0.2}};
  const double before = s_metric(front, {1, 1});
  front.push_back({0.2, 0.6});  // non-dominated addition
  CHECK(s_metric(front, {1, 1}) >= before);
}

TEST_CASE("first_dominating_generation scans the traces") {
  GenerationTrace g0;
  g0.generation = 0;
  g0.objectives = {{5, 5}, {9, 9}};
  g0.front = {0};
  GenerationTrace g1;
  g1.generation = 1;
  g1.objectives = {{2, 2}, {5, 5}};
  g1.front = {0};

  const ObjectiveVector one_colony{4, 4};
  const ObjectiveVector fixed_size{3, 3};
  CHECK(first_dominating_generation({g0, g1}, one_colony, fixed_size) == 1);
  CHECK(first_dominating_generation({g0}, one_colony, fixed_size) == std::nullopt);
  // Baselines already dominated by the initial front.
  CHECK(first_dominating_generation({g1}, one_colony, fixed_size) == 1);
}

TEST_CASE("smallED selection normalizes over the front's own range") {
  const std::vector<ObjectiveVector> front = {{0, 1}, {1, 0}, {0.4, 0.4}};
  CHECK(select_small_ed(front) == 2);

  const std::vector<ObjectiveVector> single = {{3, 7}};
  CHECK(select_small_ed(single) == 0);

  // Degenerate placement range: only response_time separates the points.
  const std::vector<ObjectiveVector> flat = {{2, 5}, {1, 5}, {3, 5}};
  CHECK(select_small_ed(flat) == 1);
}

TEST_CASE("summarize_front normalizes by the one-colony baseline") {
  const ObjectiveVector one_colony{10, 100};
  const ObjectiveVector fixed_size{8, 90};
  const std::vector<ObjectiveVector> front = {{5, 50}, {4, 80}};
  GenerationTrace trace;
  trace.generation = 0;
  trace.objectives = front;
  trace.front = {0, 1};
  const auto summary = summarize_front(front, {trace}, one_colony, fixed_size);
  // Normalized points (0.5,0.5) and (0.4,0.8) against ref (1,1):
  // strips: (0.4..0.5) x (1-0.8) + (0.5..1) x (1-0.5).
  CHECK(summary.s_metric == doctest::Approx(0.1 * 0.2 + 0.5 * 0.5));
  CHECK(summary.coverage_vs.at("one-colony") == 1.0);
  CHECK(summary.coverage_vs.at("fixed-size") == 1.0);
  CHECK(summary.first_dominating == 0);
  // Normalized distances tie at 1.0; the lower response time wins.
  CHECK(summary.small_ed == front[1]);
}
