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

#ifndef FOGCOLONY_FITNESS_HPP
#define FOGCOLONY_FITNESS_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include "fogcolony/placement.hpp"

namespace fogcolony {

enum class FitnessMode {
  kCostModel,  // deterministic: colony cost = fit checks
  kWallClock,  // colony cost = measured greedy runtime (ms)
};

struct ObjectiveVector {
  double response_time = 0.0;
  double placement_time = 0.0;

  bool operator==(const ObjectiveVector&) const = default;
};

/// x dominates y: <= in both objectives, < in at least one (minimization).
bool dominates(const ObjectiveVector& x, const ObjectiveVector& y);

struct RoutingStats {
  long long intra_pairs = 0;
  long long inter_pairs = 0;  // routed via two coordinators
  long long cloud_pairs = 0;  // routed via own coordinator to the cloud
};

/// Pre-resolved SubgraphDistances for every dendrogram node, so repeated
/// layout evaluations share the restricted shortest-path work.
class ColonyDistanceCache {
 public:
  ColonyDistanceCache(const Infrastructure& infra, const Dendrogram& dendro);
  const SubgraphDistances& at(int node_id) const { return per_node_.at(node_id); }

 private:
  std::vector<SubgraphDistances> per_node_;
};

/// Read-only routing state for one placed layout: who hosts what, which
/// colony each device belongs to, and the coordinator of each colony.
/// Communication leaves a colony only via its coordinator; the cloud hosts
/// every service and is reachable from any coordinator at cloud latency.
class RoutingContext {
 public:
  RoutingContext(const std::vector<int>& layout, const LayoutPlacement& placement,
                 const Dendrogram& dendro, const Infrastructure& infra,
                 const DistanceTable& distances, const ColonyDistanceCache* cache = nullptr);

  enum class Branch { kIntra, kInter, kCloud };
  struct Resolution {
    double time = 0.0;
    std::optional<DeviceId> device;  // nullopt: served by the cloud
    Branch branch = Branch::kIntra;
  };

  /// Cheapest way to reach an instance of `service` from `source`:
  /// the nearest instance inside the source's colony when one exists,
  /// otherwise the minimum over coordinator-routed alternatives (every
  /// other hosting colony, and the cloud).
  Resolution resolve(DeviceId source, int service) const;

  double cloud_latency() const { return infra_->cloud_latency(); }
  int colony_count() const { return static_cast<int>(nodes_.size()); }

 private:
  const Infrastructure* infra_ = nullptr;
  const DistanceTable* dist_ = nullptr;
  std::vector<int> nodes_;                   // layout, ascending
  std::vector<int> colony_of_;               // device -> colony index
  std::vector<DeviceId> coordinator_;        // per colony index
  std::vector<const SubgraphDistances*> colony_dist_;
  std::vector<SubgraphDistances> owned_;
  std::vector<std::unordered_map<int, std::vector<DeviceId>>> hosts_;  // per colony
  std::unordered_map<int, std::vector<int>> hosting_colonies_;         // service -> colonies
};

double network_time_pair(const RoutingContext& ctx, DeviceId source, int service);

/// Network time of a full request chain: user gateway to the root service,
/// then every request pair sourced at the instance resolved for the
/// previous hop. A chain that reaches the cloud finishes there.
double network_time_app(const RoutingContext& ctx, const User& user, const Application& app,
                        RoutingStats* stats = nullptr);

/// Mean network_time_app over all users. Throws std::invalid_argument when
/// the workload has no users.
double response_time(const RoutingContext& ctx, const Workload& workload,
                     RoutingStats* stats = nullptr);

/// Mean per-colony placement cost (Eq-style average over the layout's
/// colonies): fit checks in cost-model mode, measured milliseconds in
/// wall-clock mode.
double placement_time(const LayoutPlacement& placement, FitnessMode mode);

/// Everything a layout evaluation needs; members are borrowed.
struct EvalContext {
  const Infrastructure& infra;
  const Workload& workload;
  const Dendrogram& dendro;
  const DistanceTable& distances;
  const ColonyDistanceCache& colony_distances;
  FitnessMode mode = FitnessMode::kCostModel;
};

struct Evaluation {
  ObjectiveVector objectives;
  LayoutPlacement placement;
  RoutingStats routing;
};

/// Runs the placement and both objectives for a layout (ascending node
/// ids). Verifies the per-device capacity constraint on the resulting
/// placement and throws std::logic_error if it is ever violated.
Evaluation evaluate_layout(const std::vector<int>& layout, const EvalContext& ctx);

}  // namespace fogcolony

#endif  // FOGCOLONY_FITNESS_HPP
