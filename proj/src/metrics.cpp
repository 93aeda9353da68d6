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

#include "fogcolony/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fogcolony {

double coverage(const std::vector<ObjectiveVector>& a, const std::vector<ObjectiveVector>& b) {
  if (b.empty()) throw std::invalid_argument("coverage needs a non-empty reference set");
  int covered = 0;
  for (const auto& y : b) {
    for (const auto& x : a) {
      if (dominates(x, y)) {
        ++covered;
        break;
      }
    }
  }
  return static_cast<double>(covered) / static_cast<double>(b.size());
}

double s_metric(const std::vector<ObjectiveVector>& front, const ObjectiveVector& reference) {
  if (front.empty()) throw std::invalid_argument("s_metric needs a non-empty front");
  for (const auto& p : front) {
    if (p.response_time > reference.response_time || p.placement_time > reference.placement_time) {
      throw std::invalid_argument("every front point must weakly dominate the reference");
    }
  }
  // Sweep by response time; each point extends the dominated staircase.
  std::vector<ObjectiveVector> sorted = front;
  std::sort(sorted.begin(), sorted.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.response_time != b.response_time) return a.response_time < b.response_time;
    return a.placement_time < b.placement_time;
  });
  double volume = 0.0;
  double ceiling = reference.placement_time;
  for (const auto& p : sorted) {
    if (p.placement_time >= ceiling) continue;  // dominated within the sweep
    volume += (reference.response_time - p.response_time) * (ceiling - p.placement_time);
    ceiling = p.placement_time;
  }
  return volume;
}

std::optional<int> first_dominating_generation(const std::vector<GenerationTrace>& traces,
                                               const ObjectiveVector& one_colony,
                                               const ObjectiveVector& fixed_size) {
  if (traces.empty()) throw std::invalid_argument("no generation traces");
  for (const auto& trace : traces) {
    std::vector<ObjectiveVector> front;
    front.reserve(trace.front.size());
    for (int idx : trace.front) front.push_back(trace.objectives.at(idx));
    if (front.empty()) continue;
    if (coverage(front, {one_colony}) == 1.0 && coverage(front, {fixed_size}) == 1.0) {
      return trace.generation;
    }
  }
  return std::nullopt;
}

std::size_t select_small_ed(const std::vector<ObjectiveVector>& front) {
  if (front.empty()) throw std::invalid_argument("select_small_ed needs a non-empty front");
  double rt_min = front[0].response_time, rt_max = front[0].response_time;
  double pt_min = front[0].placement_time, pt_max = front[0].placement_time;
  for (const auto& p : front) {
    rt_min = std::min(rt_min, p.response_time);
    rt_max = std::max(rt_max, p.response_time);
    pt_min = std::min(pt_min, p.placement_time);
    pt_max = std::max(pt_max, p.placement_time);
  }
  auto normalized = [](double v, double lo, double hi) {
    return hi > lo ? (v - lo) / (hi - lo) : 0.0;
  };
  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < front.size(); ++i) {
    const double x = normalized(front[i].response_time, rt_min, rt_max);
    const double y = normalized(front[i].placement_time, pt_min, pt_max);
    const double dist = std::hypot(x, y);
    const bool better =
        dist < best_dist ||
        (dist == best_dist &&
         (front[i].response_time < front[best].response_time ||
          (front[i].response_time == front[best].response_time &&
           front[i].placement_time < front[best].placement_time)));
    if (i == 0 || better) {
      best = i;
      best_dist = dist;
    }
  }
  return best;
}

FrontSummary summarize_front(const std::vector<ObjectiveVector>& front,
                             const std::vector<GenerationTrace>& traces,
                             const ObjectiveVector& one_colony,
                             const ObjectiveVector& fixed_size) {
  if (front.empty()) throw std::invalid_argument("summarize_front needs a non-empty front");
  FrontSummary summary;
  summary.points = front;

  std::vector<ObjectiveVector> normalized;
  normalized.reserve(front.size());
  ObjectiveVector reference{1.0, 1.0};
  for (const auto& p : front) {
    ObjectiveVector q{p.response_time / one_colony.response_time,
                      p.placement_time / one_colony.placement_time};
    reference.response_time = std::max(reference.response_time, q.response_time);
    reference.placement_time = std::max(reference.placement_time, q.placement_time);
    normalized.push_back(q);
  }
  summary.s_metric = s_metric(normalized, reference);

  summary.coverage_vs["one-colony"] = coverage(front, {one_colony});
  summary.coverage_vs["fixed-size"] = coverage(front, {fixed_size});
  summary.coverage_vs["one-colony-vs-ga"] = coverage({one_colony}, front);
  summary.coverage_vs["fixed-size-vs-ga"] = coverage({fixed_size}, front);
  summary.first_dominating = first_dominating_generation(traces, one_colony, fixed_size);
  summary.small_ed = front[select_small_ed(front)];
  return summary;
}

}  // namespace fogcolony
