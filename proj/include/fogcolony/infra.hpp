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

#ifndef FOGCOLONY_INFRA_HPP
#define FOGCOLONY_INFRA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fogcolony {

using DeviceId = int;

struct FogDevice {
  DeviceId id = 0;
  double resource_capacity = 0.0;
  bool is_gateway = false;
};

/// Undirected link between two fog devices, weighted by latency (ms).
struct NetworkLink {
  DeviceId a = 0;
  DeviceId b = 0;
  double latency = 0.0;
};

/// Latency-weighted undirected graph of fog devices, plus a cloud anchor
/// reachable from any device at a fixed latency. Immutable after
/// construction, safe for concurrent read-only queries.
class Infrastructure {
 public:
  Infrastructure() = default;
  Infrastructure(std::vector<FogDevice> devices, std::vector<NetworkLink> links,
                 double cloud_latency);

  const std::vector<FogDevice>& devices() const { return devices_; }
  const std::vector<NetworkLink>& links() const { return links_; }
  double cloud_latency() const { return cloud_latency_; }
  int size() const { return static_cast<int>(devices_.size()); }

  /// Neighbors of `id` as (device, link latency) pairs, ascending by device.
  const std::vector<std::pair<DeviceId, double>>& neighbors(DeviceId id) const;

  /// Ids of gateway-flagged devices, ascending.
  std::vector<DeviceId> gateways() const;

  bool connected() const;

 private:
  std::vector<FogDevice> devices_;
  std::vector<NetworkLink> links_;
  double cloud_latency_ = 0.0;
  std::vector<std::vector<std::pair<DeviceId, double>>> adjacency_;
};

struct TopologyParams {
  int devices = 100;
  int attach_m = 2;  // Barabasi-Albert attachment links per new node
  double latency_min = 2.0;
  double latency_max = 6.0;
  double capacity_min = 1.0;
  double capacity_max = 4.0;
  double gateway_fraction = 0.25;
  double cloud_latency = 100.0;
};

/// Generates a Barabasi-Albert preferential-attachment topology: a seed
/// clique of attach_m + 1 devices, then each new device attaches to
/// attach_m distinct existing devices with probability proportional to
/// degree. Link latencies and device capacities are drawn uniformly from
/// their ranges; exactly round(gateway_fraction * n) devices are flagged
/// as gateways, chosen uniformly. Deterministic for a fixed seed.
///
/// Throws std::invalid_argument for n < attach_m + 1, attach_m < 1 or
/// empty/non-positive ranges.
Infrastructure generate_topology(const TopologyParams& params, std::uint64_t seed);

/// Minimum total latency over paths from `a` to `b` whose nodes all lie in
/// `restrict_to` (any node when null). Returns 0 when a == b and nullopt
/// when no such path exists. Both endpoints must be members of the
/// restriction when one is given.
std::optional<double> shortest_lat(const Infrastructure& infra, DeviceId a, DeviceId b,
                                   const std::vector<DeviceId>* restrict_to = nullptr);

/// Latency-weighted betweenness centrality of every member on the subgraph
/// induced by `members` (each unordered pair counted once). The member set
/// must induce a connected subgraph.
std::unordered_map<DeviceId, double> betweenness(const Infrastructure& infra,
                                                 const std::vector<DeviceId>& members);

/// Dense all-pairs shortest-latency matrix over the full graph.
class DistanceTable {
 public:
  explicit DistanceTable(const Infrastructure& infra);
  double at(DeviceId a, DeviceId b) const { return dist_[static_cast<std::size_t>(a) * n_ + b]; }
  int size() const { return n_; }

 private:
  int n_ = 0;
  std::vector<double> dist_;
};

/// All-pairs shortest-latency matrix restricted to a member set; paths may
/// not leave the set. Queries for non-members are invalid.
class SubgraphDistances {
 public:
  SubgraphDistances() = default;
  SubgraphDistances(const Infrastructure& infra, std::vector<DeviceId> members);

  double at(DeviceId a, DeviceId b) const {
    return dist_[static_cast<std::size_t>(local_.at(a)) * members_.size() + local_.at(b)];
  }
  const std::vector<DeviceId>& members() const { return members_; }

 private:
  std::vector<DeviceId> members_;  // sorted
  std::unordered_map<DeviceId, int> local_;
  std::vector<double> dist_;
};

}  // namespace fogcolony

#endif  // FOGCOLONY_INFRA_HPP
