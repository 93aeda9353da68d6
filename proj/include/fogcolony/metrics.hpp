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

#ifndef FOGCOLONY_METRICS_HPP
#define FOGCOLONY_METRICS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fogcolony/evolve.hpp"

namespace fogcolony {

/// Fraction of the points in `b` dominated by some point of `a` (weak
/// dominance with at least one strict objective). Throws on empty b.
double coverage(const std::vector<ObjectiveVector>& a, const std::vector<ObjectiveVector>& b);

/// 2-D hypervolume between a point set and a reference point that every
/// point must weakly dominate (throws otherwise). Points on the reference
/// boundary contribute zero area.
double s_metric(const std::vector<ObjectiveVector>& front, const ObjectiveVector& reference);

/// Smallest generation whose Pareto front fully dominates both baseline
/// points (coverage 1 against each singleton); nullopt when none does.
std::optional<int> first_dominating_generation(const std::vector<GenerationTrace>& traces,
                                               const ObjectiveVector& one_colony,
                                               const ObjectiveVector& fixed_size);

/// Index of the front member closest to the origin after per-objective
/// min-max normalization over the front's own range (a degenerate range
/// normalizes to 0). Ties prefer lower response time, then lower placement
/// time.
std::size_t select_small_ed(const std::vector<ObjectiveVector>& front);

struct FrontSummary {
  std::vector<ObjectiveVector> points;
  double s_metric = 0.0;  // on baseline-normalized objectives
  std::map<std::string, double> coverage_vs;
  std::optional<int> first_dominating;
  ObjectiveVector small_ed;
};

/// Table-style summary of a finished run. The S metric is computed on
/// objectives normalized by the one-colony baseline, against a reference
/// at the componentwise max of (1, 1) and the normalized front, so values
/// above 1 indicate a front reaching beyond the baseline rectangle.
FrontSummary summarize_front(const std::vector<ObjectiveVector>& front,
                             const std::vector<GenerationTrace>& traces,
                             const ObjectiveVector& one_colony, const ObjectiveVector& fixed_size);

}  // namespace fogcolony

#endif  // FOGCOLONY_METRICS_HPP
