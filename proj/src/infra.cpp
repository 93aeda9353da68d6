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

#include "fogcolony/infra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace fogcolony {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tolerance for treating two path latencies as equal when counting
// shortest paths (sums of the same link weights in different orders).
constexpr double kPathEps = 1e-9;

void check_range(double lo, double hi, const char* what) {
  if (!(lo > 0.0) || !(hi >= lo)) {
    throw std::invalid_argument(std::string(what) + " range must satisfy 0 < min <= max");
  }
}

// Dijkstra from `source` over an adjacency restricted by `allowed`
// (empty mask = no restriction). Fills `dist` indexed by device id.
void dijkstra(const Infrastructure& infra, DeviceId source,
              const std::vector<char>& allowed, std::vector<double>& dist) {
  dist.assign(infra.size(), kInf);
  dist[source] = 0.0;
  using Item = std::pair<double, DeviceId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const auto& [v, lat] : infra.neighbors(u)) {
      if (!allowed.empty() && !allowed[v]) continue;
      double nd = d + lat;
      if (nd < dist[v]) {
        dist[v] = nd;
        heap.emplace(nd, v);
      }
    }
  }
}

}  // namespace

Infrastructure::Infrastructure(std::vector<FogDevice> devices, std::vector<NetworkLink> links,
                               double cloud_latency)
    : devices_(std::move(devices)), links_(std::move(links)), cloud_latency_(cloud_latency) {
  const int n = static_cast<int>(devices_.size());
  if (n == 0) throw std::invalid_argument("infrastructure needs at least one device");
  if (!(cloud_latency_ > 0.0)) throw std::invalid_argument("cloud latency must be positive");
  for (int i = 0; i < n; ++i) {
    if (devices_[i].id != i) throw std::invalid_argument("device ids must be dense, 0..n-1");
    if (!(devices_[i].resource_capacity > 0.0)) {
      throw std::invalid_argument("device capacity must be positive");
    }
  }
  adjacency_.resize(n);
  std::set<std::pair<DeviceId, DeviceId>> seen;
  for (const auto& link : links_) {
    if (link.a < 0 || link.a >= n || link.b < 0 || link.b >= n) {
      throw std::invalid_argument("link endpoint out of range");
    }
    if (link.a == link.b) throw std::invalid_argument("self-loop link");
    if (!(link.latency > 0.0)) throw std::invalid_argument("link latency must be positive");
    auto key = std::minmax(link.a, link.b);
    if (!seen.insert(key).second) throw std::invalid_argument("duplicate link");
    adjacency_[link.a].emplace_back(link.b, link.latency);
    adjacency_[link.b].emplace_back(link.a, link.latency);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  if (!connected()) throw std::invalid_argument("infrastructure graph must be connected");
}

const std::vector<std::pair<DeviceId, double>>& Infrastructure::neighbors(DeviceId id) const {
  return adjacency_.at(id);
}

std::vector<DeviceId> Infrastructure::gateways() const {
  std::vector<DeviceId> out;
  for (const auto& d : devices_) {
    if (d.is_gateway) out.push_back(d.id);
  }
  return out;
}

bool Infrastructure::connected() const {
  if (devices_.empty()) return false;
  std::vector<char> seen(devices_.size(), 0);
  std::queue<DeviceId> frontier;
  frontier.push(0);
  seen[0] = 1;
  int count = 1;
  while (!frontier.empty()) {
    DeviceId u = frontier.front();
    frontier.pop();
    for (const auto& [v, lat] : adjacency_[u]) {
      (void)lat;
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        frontier.push(v);
      }
    }
  }
  return count == static_cast<int>(devices_.size());
}

Infrastructure generate_topology(const TopologyParams& params, std::uint64_t seed) {
  const int n = params.devices;
  const int m = params.attach_m;
  if (m < 1) throw std::invalid_argument("attach_m must be >= 1");
  if (n < m + 1) {
    throw std::invalid_argument("devices must be >= attach_m + 1 (seed clique)");
  }
  check_range(params.latency_min, params.latency_max, "latency");
  check_range(params.capacity_min, params.capacity_max, "capacity");
  if (params.gateway_fraction < 0.0 || params.gateway_fraction > 1.0) {
    throw std::invalid_argument("gateway_fraction must lie in [0, 1]");
  }
  if (!(params.cloud_latency > 0.0)) throw std::invalid_argument("cloud latency must be positive");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lat_dist(params.latency_min, params.latency_max);
  std::uniform_real_distribution<double> cap_dist(params.capacity_min, params.capacity_max);

  std::vector<NetworkLink> links;
  // One entry per link endpoint; sampling an index uniformly gives
  // degree-proportional attachment.
  std::vector<DeviceId> endpoint_pool;
  std::vector<std::set<DeviceId>> linked(n);

  auto add_link = [&](DeviceId a, DeviceId b) {
    links.push_back({a, b, lat_dist(rng)});
    linked[a].insert(b);
    linked[b].insert(a);
    endpoint_pool.push_back(a);
    endpoint_pool.push_back(b);
  };

  const int seed_size = m + 1;
  for (int i = 0; i < seed_size; ++i) {
    for (int j = i + 1; j < seed_size; ++j) add_link(i, j);
  }
  for (DeviceId v = seed_size; v < n; ++v) {
    int added = 0;
    while (added < m) {
      std::uniform_int_distribution<std::size_t> pick(0, endpoint_pool.size() - 1);
      DeviceId target = endpoint_pool[pick(rng)];
      if (target == v || linked[v].count(target)) continue;
      add_link(v, target);
      ++added;
    }
  }

  std::vector<FogDevice> devices(n);
  for (int i = 0; i < n; ++i) {
    devices[i].id = i;
    devices[i].resource_capacity = cap_dist(rng);
  }

  const int gateway_count = static_cast<int>(std::lround(params.gateway_fraction * n));
  std::vector<DeviceId> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  for (int i = 0; i < gateway_count; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(ids[i], ids[pick(rng)]);
    devices[ids[i]].is_gateway = true;
  }

  return Infrastructure(std::move(devices), std::move(links), params.cloud_latency);
}

std::optional<double> shortest_lat(const Infrastructure& infra, DeviceId a, DeviceId b,
                                   const std::vector<DeviceId>* restrict_to) {
  const int n = infra.size();
  if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("device id out of range");
  std::vector<char> allowed;
  if (restrict_to != nullptr) {
    allowed.assign(n, 0);
    for (DeviceId d : *restrict_to) allowed.at(d) = 1;
    if (!allowed[a] || !allowed[b]) {
      throw std::invalid_argument("shortest_lat endpoints must be inside the restriction");
    }
  }
  if (a == b) return 0.0;
  std::vector<double> dist;
  dijkstra(infra, a, allowed, dist);
  if (dist[b] == kInf) return std::nullopt;
  return dist[b];
}

std::unordered_map<DeviceId, double> betweenness(const Infrastructure& infra,
                                                 const std::vector<DeviceId>& members) {
  std::vector<DeviceId> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw std::invalid_argument("betweenness needs a non-empty member set");

  const int k = static_cast<int>(sorted.size());
  std::unordered_map<DeviceId, int> local;
  for (int i = 0; i < k; ++i) local[sorted[i]] = i;

  // Induced adjacency with local indices.
  std::vector<std::vector<std::pair<int, double>>> adj(k);
  for (int i = 0; i < k; ++i) {
    for (const auto& [v, lat] : infra.neighbors(sorted[i])) {
      auto it = local.find(v);
      if (it != local.end()) adj[i].emplace_back(it->second, lat);
    }
  }

  // Connectivity of the induced subgraph.
  {
    std::vector<char> seen(k, 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int count = 1;
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (const auto& [v, lat] : adj[u]) {
        (void)lat;
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          frontier.push(v);
        }
      }
    }
    if (count != k) throw std::invalid_argument("member set must induce a connected subgraph");
  }

  // Brandes' algorithm with Dijkstra; unordered pairs counted once.
  std::vector<double> score(k, 0.0);
  std::vector<double> dist(k), sigma(k), delta(k);
  std::vector<std::vector<int>> preds(k);
  for (int s = 0; s < k; ++s) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    dist[s] = 0.0;
    sigma[s] = 1.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0.0, s);
    std::vector<int> order;
    std::vector<char> done(k, 0);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (done[u]) continue;
      done[u] = 1;
      order.push_back(u);
      for (const auto& [v, lat] : adj[u]) {
        double nd = dist[u] + lat;
        if (nd < dist[v] - kPathEps) {
          dist[v] = nd;
          sigma[v] = sigma[u];
          preds[v] = {u};
          heap.emplace(nd, v);
        } else if (std::abs(nd - dist[v]) <= kPathEps) {
          sigma[v] += sigma[u];
          preds[v].push_back(u);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int w = *it;
      for (int u : preds[w]) {
        delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) score[w] += delta[w];
    }
  }

  std::unordered_map<DeviceId, double> out;
  for (int i = 0; i < k; ++i) out[sorted[i]] = score[i] / 2.0;
  return out;
}

DistanceTable::DistanceTable(const Infrastructure& infra) : n_(infra.size()) {
  dist_.resize(static_cast<std::size_t>(n_) * n_);
  std::vector<double> row;
  std::vector<char> no_restriction;
  for (int s = 0; s < n_; ++s) {
    dijkstra(infra, s, no_restriction, row);
    std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::size_t>(s) * n_);
  }
}

SubgraphDistances::SubgraphDistances(const Infrastructure& infra, std::vector<DeviceId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  const int k = static_cast<int>(members_.size());
  for (int i = 0; i < k; ++i) local_[members_[i]] = i;
  std::vector<char> allowed(infra.size(), 0);
  for (DeviceId d : members_) allowed.at(d) = 1;
  dist_.resize(static_cast<std::size_t>(k) * k);
  std::vector<double> row;
  for (int i = 0; i < k; ++i) {
    dijkstra(infra, members_[i], allowed, row);
    for (int j = 0; j < k; ++j) dist_[static_cast<std::size_t>(i) * k + j] = row[members_[j]];
  }
}

}  // namespace fogcolony
