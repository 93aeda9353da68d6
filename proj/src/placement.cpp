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

#include "fogcolony/placement.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace fogcolony {

namespace {

struct QueueEntry {
  int service = 0;
  std::vector<int> tried;  // empty for own-requested services
};

// Shared machinery for single-colony runs and full-layout rounds. Device
// capacities live here so they persist across rounds.
class PlacementEngine {
 public:
  PlacementEngine(const Infrastructure& infra, const Workload& workload,
                  const DistanceTable* distances)
      : infra_(infra), catalog_(build_catalog(workload)) {
    if (distances == nullptr) {
      owned_distances_.emplace(infra);
      distances = &*owned_distances_;
    }
    dist_ = distances;
    remaining_.resize(infra.size());
    for (const auto& dev : infra.devices()) remaining_[dev.id] = dev.resource_capacity;
  }

  const ServiceCatalog& catalog() const { return catalog_; }

  // Processes one colony's queue. `hosted` maps service -> host devices in
  // this colony and is updated in place. Returns the items that overflowed.
  std::vector<ShiftedItem> run_colony(
      const CandidateColony& colony, const ColonyWorkQueue& queue,
      std::unordered_map<int, std::vector<DeviceId>>& hosted, ColonyPlacement& out) {
    const auto started = std::chrono::steady_clock::now();

    std::vector<QueueEntry> entries;
    entries.reserve(queue.requested.size() + queue.shifted.size());
    for (int s : queue.requested) entries.push_back({s, {}});
    const std::size_t own_count = entries.size();
    for (const auto& item : queue.shifted) entries.push_back({item.service, item.tried});
    auto by_popularity = [this](const QueueEntry& a, const QueueEntry& b) {
      const int pa = catalog_.popularity.at(a.service);
      const int pb = catalog_.popularity.at(b.service);
      if (pa != pb) return pa > pb;
      return a.service < b.service;
    };
    std::stable_sort(entries.begin(), entries.begin() + own_count, by_popularity);
    std::stable_sort(entries.begin() + own_count, entries.end(), by_popularity);

    std::vector<ShiftedItem> overflow;
    for (auto& entry : entries) {
      const int service = entry.service;
      if (hosted.count(service)) continue;  // one instance per colony is enough

      const std::vector<DeviceId> requested_at = devices_where_requested(service, hosted);
      std::vector<DeviceId> order = rank_devices(colony.devices, requested_at);

      const double req = catalog_.resource_req.at(service);
      bool placed = false;
      for (DeviceId dev : order) {
        out.cost.fit_checks += 1;
        if (remaining_[dev] >= req) {
          remaining_[dev] -= req;
          hosted[service].push_back(dev);
          out.placed.emplace_back(service, dev);
          placed = true;
          break;
        }
      }
      out.cost.services_processed += 1;
      if (!placed) {
        entry.tried.push_back(colony.id);
        overflow.push_back({service, std::move(entry.tried)});
      }
    }

    out.cost.wall_seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return overflow;
  }

 private:
  // Devices the service is requested from: the app's user gateways for a
  // root service, the colony-local hosts of the parent service otherwise
  // (falling back to the gateways when the parent is not placed here).
  std::vector<DeviceId> devices_where_requested(
      int service, const std::unordered_map<int, std::vector<DeviceId>>& hosted) const {
    const int parent = catalog_.parent_of.at(service);
    if (parent >= 0) {
      auto it = hosted.find(parent);
      if (it != hosted.end() && !it->second.empty()) {
        std::vector<DeviceId> hosts = it->second;
        std::sort(hosts.begin(), hosts.end());
        hosts.erase(std::unique(hosts.begin(), hosts.end()), hosts.end());
        return hosts;
      }
    }
    return catalog_.gateways_of_app.at(catalog_.app_of.at(service));
  }

  // Colony devices ascending by (mean, max) latency to the requesting
  // devices, ties by id.
  std::vector<DeviceId> rank_devices(const std::vector<DeviceId>& colony_devices,
                                     const std::vector<DeviceId>& requested_at) const {
    struct Key {
      double mean;
      double max;
      DeviceId dev;
    };
    std::vector<Key> keys;
    keys.reserve(colony_devices.size());
    for (DeviceId dev : colony_devices) {
      double sum = 0.0;
      double worst = 0.0;
      for (DeviceId at : requested_at) {
        const double lat = dist_->at(dev, at);
        sum += lat;
        worst = std::max(worst, lat);
      }
      const double mean = requested_at.empty() ? 0.0 : sum / requested_at.size();
      keys.push_back({mean, worst, dev});
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
      if (a.mean != b.mean) return a.mean < b.mean;
      if (a.max != b.max) return a.max < b.max;
      return a.dev < b.dev;
    });
    std::vector<DeviceId> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(k.dev);
    return out;
  }

  const Infrastructure& infra_;
  ServiceCatalog catalog_;
  const DistanceTable* dist_ = nullptr;
  std::optional<DistanceTable> owned_distances_;
  std::vector<double> remaining_;
};

}  // namespace

std::pair<ColonyPlacement, std::vector<ShiftedItem>> place_colony(
    const CandidateColony& colony, const ColonyWorkQueue& queue, const Infrastructure& infra,
    const Workload& workload, const DistanceTable* distances) {
  PlacementEngine engine(infra, workload, distances);
  ColonyPlacement out;
  out.colony_node = colony.id;
  std::unordered_map<int, std::vector<DeviceId>> hosted;
  auto overflow = engine.run_colony(colony, queue, hosted, out);
  return {std::move(out), std::move(overflow)};
}

LayoutPlacement place_layout(const std::vector<int>& layout, const Infrastructure& infra,
                             const Workload& workload, const Dendrogram& dendro,
                             const DistanceTable* distances) {
  if (layout.empty()) throw std::invalid_argument("layout has no colonies");
  std::vector<int> nodes = layout;
  std::sort(nodes.begin(), nodes.end());

  PlacementEngine engine(infra, workload, distances);
  const int colony_count = static_cast<int>(nodes.size());

  std::vector<int> colony_of(infra.size(), -1);
  for (int c = 0; c < colony_count; ++c) {
    for (DeviceId dev : dendro.node(nodes[c]).devices) {
      if (colony_of[dev] != -1) throw std::invalid_argument("layout colonies overlap");
      colony_of[dev] = c;
    }
    if (dendro.node(nodes[c]).coordinator < 0) {
      throw std::invalid_argument("layout requires assigned coordinators");
    }
  }
  for (DeviceId dev = 0; dev < infra.size(); ++dev) {
    if (colony_of[dev] == -1) throw std::invalid_argument("layout does not cover every device");
  }

  LayoutPlacement result;
  result.colonies.resize(colony_count);
  std::vector<std::unordered_map<int, std::vector<DeviceId>>> hosted(colony_count);
  for (int c = 0; c < colony_count; ++c) result.colonies[c].colony_node = nodes[c];

  // Round 0: each colony queues every service of the applications its own
  // users request.
  std::vector<std::set<int>> requested(colony_count);
  for (const auto& user : workload.users) {
    const int c = colony_of[user.gateway_device];
    for (const auto& svc : workload.apps.at(user.app_id).services) {
      requested[c].insert(svc.id);
    }
  }
  std::vector<ColonyWorkQueue> queues(colony_count);
  for (int c = 0; c < colony_count; ++c) {
    queues[c].requested.assign(requested[c].begin(), requested[c].end());
  }

  const DistanceTable* dist = distances;
  std::optional<DistanceTable> owned;
  if (dist == nullptr) {
    owned.emplace(infra);
    dist = &*owned;
  }

  // Colonies a service has been tried at (and failed), shared across all
  // in-flight copies of the service so no colony scans it twice.
  std::map<int, std::set<int>> tried_by_service;

  std::set<int> cloud;
  while (true) {
    // Shifts are collected per round, then dispatched in colony order.
    std::vector<std::pair<int, ShiftedItem>> outgoing;
    for (int c = 0; c < colony_count; ++c) {
      if (queues[c].requested.empty() && queues[c].shifted.empty()) continue;
      auto overflow =
          engine.run_colony(dendro.node(nodes[c]), queues[c], hosted[c], result.colonies[c]);
      for (auto& item : overflow) {
        auto& tried = tried_by_service[item.service];
        tried.insert(item.tried.begin(), item.tried.end());
        outgoing.emplace_back(c, std::move(item));
      }
      queues[c].requested.clear();
      queues[c].shifted.clear();
    }
    if (outgoing.empty()) break;

    for (auto& [origin, item] : outgoing) {
      auto& tried = tried_by_service[item.service];
      int best = -1;
      double best_lat = std::numeric_limits<double>::infinity();
      for (int c = 0; c < colony_count; ++c) {
        if (tried.count(nodes[c])) continue;
        const double lat = dist->at(dendro.node(nodes[origin]).coordinator,
                                    dendro.node(nodes[c]).coordinator);
        if (lat < best_lat) {
          best_lat = lat;
          best = c;
        }
      }
      if (best == -1) {
        cloud.insert(item.service);
      } else {
        tried.insert(nodes[best]);  // reserve: no second copy heads there
        item.tried.assign(tried.begin(), tried.end());
        queues[best].shifted.push_back(std::move(item));
      }
    }
  }

  result.cloud_services.assign(cloud.begin(), cloud.end());
  return result;
}

}  // namespace fogcolony
