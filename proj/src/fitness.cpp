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

#include "fogcolony/fitness.hpp"

#include <algorithm>
#include <stdexcept>

namespace fogcolony {

bool dominates(const ObjectiveVector& x, const ObjectiveVector& y) {
  if (x.response_time > y.response_time || x.placement_time > y.placement_time) return false;
  return x.response_time < y.response_time || x.placement_time < y.placement_time;
}

ColonyDistanceCache::ColonyDistanceCache(const Infrastructure& infra, const Dendrogram& dendro) {
  per_node_.reserve(dendro.size());
  for (const auto& node : dendro.nodes) {
    per_node_.emplace_back(infra, node.devices);
  }
}

RoutingContext::RoutingContext(const std::vector<int>& layout, const LayoutPlacement& placement,
                               const Dendrogram& dendro, const Infrastructure& infra,
                               const DistanceTable& distances, const ColonyDistanceCache* cache)
    : infra_(&infra), dist_(&distances), nodes_(layout) {
  std::sort(nodes_.begin(), nodes_.end());
  const int colony_count = static_cast<int>(nodes_.size());
  colony_of_.assign(infra.size(), -1);
  coordinator_.resize(colony_count);
  colony_dist_.resize(colony_count);
  hosts_.resize(colony_count);
  if (cache == nullptr) owned_.reserve(colony_count);

  for (int c = 0; c < colony_count; ++c) {
    const auto& node = dendro.node(nodes_[c]);
    if (node.coordinator < 0) throw std::invalid_argument("colony has no coordinator assigned");
    coordinator_[c] = node.coordinator;
    for (DeviceId dev : node.devices) {
      if (colony_of_[dev] != -1) throw std::invalid_argument("layout colonies overlap");
      colony_of_[dev] = c;
    }
    if (cache != nullptr) {
      colony_dist_[c] = &cache->at(nodes_[c]);
    } else {
      owned_.emplace_back(infra, node.devices);
      colony_dist_[c] = &owned_.back();
    }
  }
  for (DeviceId dev = 0; dev < infra.size(); ++dev) {
    if (colony_of_[dev] == -1) throw std::invalid_argument("layout does not cover every device");
  }

  for (const auto& colony : placement.colonies) {
    const auto it = std::find(nodes_.begin(), nodes_.end(), colony.colony_node);
    if (it == nodes_.end()) throw std::invalid_argument("placement colony not in layout");
    const int c = static_cast<int>(it - nodes_.begin());
    for (const auto& [service, dev] : colony.placed) {
      hosts_[c][service].push_back(dev);
    }
  }
  for (int c = 0; c < colony_count; ++c) {
    for (auto& [service, devs] : hosts_[c]) {
      std::sort(devs.begin(), devs.end());
      auto& colonies = hosting_colonies_[service];
      if (colonies.empty() || colonies.back() != c) colonies.push_back(c);
    }
  }
  // hosting_colonies_ entries must be ascending for deterministic ties.
  for (auto& [service, colonies] : hosting_colonies_) {
    std::sort(colonies.begin(), colonies.end());
  }
}

RoutingContext::Resolution RoutingContext::resolve(DeviceId source, int service) const {
  const int own = colony_of_.at(source);

  // Instance in the source's own colony: nearest one, paths restricted to
  // colony members.
  {
    const auto it = hosts_[own].find(service);
    if (it != hosts_[own].end()) {
      Resolution best{0.0, std::nullopt, Branch::kIntra};
      bool first = true;
      for (DeviceId dev : it->second) {
        const double t = colony_dist_[own]->at(source, dev);
        if (first || t < best.time) {
          best.time = t;
          best.device = dev;
          first = false;
        }
      }
      return best;
    }
  }

  const double to_coord = colony_dist_[own]->at(source, coordinator_[own]);
  Resolution best{to_coord + infra_->cloud_latency(), std::nullopt, Branch::kCloud};

  const auto hosting = hosting_colonies_.find(service);
  if (hosting != hosting_colonies_.end()) {
    for (int c : hosting->second) {
      if (c == own) continue;
      const double coord_leg = dist_->at(coordinator_[own], coordinator_[c]);
      double leg = 0.0;
      DeviceId leg_dev = -1;
      bool first = true;
      for (DeviceId dev : hosts_[c].at(service)) {
        const double t = colony_dist_[c]->at(coordinator_[c], dev);
        if (first || t < leg) {
          leg = t;
          leg_dev = dev;
          first = false;
        }
      }
      const double total = to_coord + coord_leg + leg;
      if (total < best.time) {
        best = {total, leg_dev, Branch::kInter};
      }
    }
  }
  return best;
}

double network_time_pair(const RoutingContext& ctx, DeviceId source, int service) {
  return ctx.resolve(source, service).time;
}

double network_time_app(const RoutingContext& ctx, const User& user, const Application& app,
                        RoutingStats* stats) {
  auto note = [stats](RoutingContext::Branch branch) {
    if (stats == nullptr) return;
    switch (branch) {
      case RoutingContext::Branch::kIntra: stats->intra_pairs += 1; break;
      case RoutingContext::Branch::kInter: stats->inter_pairs += 1; break;
      case RoutingContext::Branch::kCloud: stats->cloud_pairs += 1; break;
    }
  };

  double total = 0.0;
  std::unordered_map<int, std::optional<DeviceId>> resolved_at;

  const auto root = ctx.resolve(user.gateway_device, app.root_service);
  total += root.time;
  note(root.branch);
  resolved_at[app.root_service] = root.device;

  for (const auto& [from, to] : app_request_pairs(app)) {
    const auto& source = resolved_at.at(from);
    if (!source) {
      // The chain reached the cloud; the remaining services run there.
      resolved_at[to] = std::nullopt;
      continue;
    }
    const auto hop = ctx.resolve(*source, to);
    total += hop.time;
    note(hop.branch);
    resolved_at[to] = hop.device;
  }
  return total;
}

double response_time(const RoutingContext& ctx, const Workload& workload, RoutingStats* stats) {
  if (workload.users.empty()) {
    throw std::invalid_argument("response_time is undefined for zero users");
  }
  double sum = 0.0;
  for (const auto& user : workload.users) {
    sum += network_time_app(ctx, user, workload.apps.at(user.app_id), stats);
  }
  return sum / static_cast<double>(workload.users.size());
}

double placement_time(const LayoutPlacement& placement, FitnessMode mode) {
  if (placement.colonies.empty()) throw std::invalid_argument("placement has no colonies");
  double sum = 0.0;
  for (const auto& colony : placement.colonies) {
    sum += mode == FitnessMode::kCostModel ? static_cast<double>(colony.cost.fit_checks)
                                           : colony.cost.wall_seconds * 1000.0;
  }
  return sum / static_cast<double>(placement.colonies.size());
}

namespace {

void verify_capacities(const LayoutPlacement& placement, const EvalContext& ctx) {
  std::vector<double> used(ctx.infra.size(), 0.0);
  const auto catalog = build_catalog(ctx.workload);
  for (const auto& colony : placement.colonies) {
    for (const auto& [service, dev] : colony.placed) {
      used[dev] += catalog.resource_req.at(service);
    }
  }
  for (const auto& dev : ctx.infra.devices()) {
    if (used[dev.id] > dev.resource_capacity + 1e-9) {
      throw std::logic_error("placement exceeded a device's resource capacity");
    }
  }
}

}  // namespace

Evaluation evaluate_layout(const std::vector<int>& layout, const EvalContext& ctx) {
  Evaluation out;
  out.placement = place_layout(layout, ctx.infra, ctx.workload, ctx.dendro, &ctx.distances);
  verify_capacities(out.placement, ctx);
  const RoutingContext routing(layout, out.placement, ctx.dendro, ctx.infra, ctx.distances,
                               &ctx.colony_distances);
  out.objectives.response_time = response_time(routing, ctx.workload, &out.routing);
  out.objectives.placement_time = placement_time(out.placement, ctx.mode);
  return out;
}

}  // namespace fogcolony
