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

#ifndef FOGCOLONY_PLACEMENT_HPP
#define FOGCOLONY_PLACEMENT_HPP

#include <utility>
#include <vector>

#include "fogcolony/dendro.hpp"
#include "fogcolony/workload.hpp"

namespace fogcolony {

/// Deterministic cost proxy for the greedy run, plus the measured wall
/// clock for the wall-clock fitness mode.
struct PlacementCost {
  long long fit_checks = 0;         // capacity tests performed
  long long services_processed = 0; // queue items that went through device scans
  double wall_seconds = 0.0;
};

/// A service instance looking for a host, with the colonies that already
/// failed to place it.
struct ShiftedItem {
  int service = 0;
  std::vector<int> tried;  // colony node ids, in shift order
};

/// Work for one colony in one round: services requested by the colony's own
/// users, then services shifted in from elsewhere. Both halves are
/// processed most-popular first.
struct ColonyWorkQueue {
  std::vector<int> requested;
  std::vector<ShiftedItem> shifted;
};

/// Sparse placement matrix of one colony: (service, device) pairs.
struct ColonyPlacement {
  int colony_node = -1;
  std::vector<std::pair<int, DeviceId>> placed;
  PlacementCost cost;
};

struct LayoutPlacement {
  std::vector<ColonyPlacement> colonies;  // layout order (ascending node id)
  std::vector<int> cloud_services;        // sorted unique services that fell back
};

/// Runs the first-fit decreasing greedy inside a single colony with fresh
/// capacities: services ordered by popularity descending (own-requested
/// before shifted, ties by id), devices ordered by mean latency to the
/// devices requesting the service. Returns the placements plus the items
/// that did not fit anywhere.
std::pair<ColonyPlacement, std::vector<ShiftedItem>> place_colony(
    const CandidateColony& colony, const ColonyWorkQueue& queue, const Infrastructure& infra,
    const Workload& workload, const DistanceTable* distances = nullptr);

/// Full placement of a layout: round 0 places every colony's own requests,
/// then shifted services hop to the colony with the nearest coordinator not
/// yet tried, falling back to the cloud once every colony failed. Device
/// capacities persist across rounds; per-colony costs accumulate.
LayoutPlacement place_layout(const std::vector<int>& layout, const Infrastructure& infra,
                             const Workload& workload, const Dendrogram& dendro,
                             const DistanceTable* distances = nullptr);

}  // namespace fogcolony

#endif  // FOGCOLONY_PLACEMENT_HPP
