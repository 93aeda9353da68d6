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

#ifndef FOGCOLONY_TESTS_FIXTURES_HPP
#define FOGCOLONY_TESTS_FIXTURES_HPP

#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "fogcolony/infra.hpp"
#include "fogcolony/workload.hpp"

namespace fogtest {

using fogcolony::DeviceId;
using fogcolony::Infrastructure;

struct Edge {
  int a;
  int b;
  double latency;
};

inline Infrastructure make_infra(int n, const std::vector<Edge>& edges,
                                 const std::vector<DeviceId>& gateways, double capacity = 2.0,
                                 double cloud_latency = 100.0) {
  std::vector<fogcolony::FogDevice> devices(n);
  for (int i = 0; i < n; ++i) {
    devices[i].id = i;
    devices[i].resource_capacity = capacity;
  }
  for (DeviceId g : gateways) devices.at(g).is_gateway = true;
  std::vector<fogcolony::NetworkLink> links;
  for (const auto& e : edges) links.push_back({e.a, e.b, e.latency});
  return Infrastructure(std::move(devices), std::move(links), cloud_latency);
}

/// Nine-device instance whose adjacency-constrained average-linkage
/// dendrogram is pinned node by node: internal nodes
/// C9={f3,f4}, C10={f1,f6}, C11={f2,f8}, C12={f3,f4,f5}, C13={f0,f1,f6},
/// C14={f2,f7,f8}, C15=C13+C12, C16=root.
inline Infrastructure nine_device_infra(double capacity = 2.0) {
  return make_infra(9,
                    {{3, 4, 1.0},
                     {1, 6, 2.0},
                     {2, 8, 3.0},
                     {4, 5, 8.0},
                     {0, 1, 9.0},
                     {2, 7, 10.0},
                     {6, 3, 20.0},
                     {5, 2, 30.0}},
                    {0, 4, 7}, capacity);
}

/// Two-colony routing example: colony A = devices {0,1,2} (path
/// 0-1.93-1-1.8-2, coordinator 1), colony B = {3,4} (3-1.95-4,
/// coordinator 3), coordinators linked at 2.5.
inline Infrastructure two_colony_infra() {
  return make_infra(5, {{0, 1, 1.93}, {1, 2, 1.8}, {3, 4, 1.95}, {1, 3, 2.5}}, {0}, 10.0);
}

/// Single-colony routing example: path 0-2.7-1-3.8-2, user gateway at 0.
inline Infrastructure single_colony_infra() {
  return make_infra(3, {{0, 1, 2.7}, {1, 2, 3.8}}, {0}, 10.0);
}

/// Three-service chain app (ids 0 -> 1 -> 2) plus one user at `gateway`.
inline fogcolony::Workload chain_workload(DeviceId gateway) {
  fogcolony::Workload workload;
  fogcolony::Application app;
  app.id = 0;
  app.services = {{0, 0, 1.0}, {1, 0, 1.0}, {2, 0, 1.0}};
  app.requests = {{0, 1}, {1, 2}};
  app.root_service = 0;
  workload.apps.push_back(app);
  workload.users.push_back({0, 0, gateway, 0.2});
  return workload;
}

/// Exhaustive simple-path search; oracle for Dijkstra-based queries.
inline std::optional<double> brute_shortest(const Infrastructure& infra, DeviceId a, DeviceId b,
                                            const std::set<DeviceId>& allowed) {
  if (a == b) return 0.0;
  std::optional<double> best;
  std::vector<char> visited(infra.size(), 0);
  auto dfs = [&](auto&& self, DeviceId u, double acc) -> void {
    if (u == b) {
      if (!best || acc < *best) best = acc;
      return;
    }
    visited[u] = 1;
    for (const auto& [v, lat] : infra.neighbors(u)) {
      if (visited[v] || (!allowed.empty() && !allowed.count(v))) continue;
      self(self, v, acc + lat);
    }
    visited[u] = 0;
  };
  if (!allowed.empty() && (!allowed.count(a) || !allowed.count(b))) return std::nullopt;
  dfs(dfs, a, 0.0);
  return best;
}

/// Betweenness by explicit path enumeration: for every unordered pair,
/// count the minimum-latency simple paths and credit interior nodes with
/// their fraction.
inline std::map<DeviceId, double> brute_betweenness(const Infrastructure& infra,
                                                    const std::vector<DeviceId>& members) {
  constexpr double kEps = 1e-9;
  std::map<DeviceId, double> score;
  for (DeviceId d : members) score[d] = 0.0;
  std::set<DeviceId> allowed(members.begin(), members.end());

  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const DeviceId s = members[i];
      const DeviceId t = members[j];
      std::vector<std::vector<DeviceId>> paths;
      std::vector<DeviceId> current = {s};
      std::vector<char> visited(infra.size(), 0);
      auto dfs = [&](auto&& self, DeviceId u, double acc) -> void {
        if (u == t) {
          paths.push_back(current);
          return;
        }
        visited[u] = 1;
        for (const auto& [v, lat] : infra.neighbors(u)) {
          if (visited[v] || !allowed.count(v)) continue;
          current.push_back(v);
          self(self, v, acc + lat);
          current.pop_back();
        }
        visited[u] = 0;
      };
      dfs(dfs, s, 0.0);

      double best = std::numeric_limits<double>::infinity();
      auto length = [&](const std::vector<DeviceId>& path) {
        double acc = 0.0;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
          for (const auto& [v, lat] : infra.neighbors(path[k])) {
            if (v == path[k + 1]) {
              acc += lat;
              break;
            }
          }
        }
        return acc;
      };
      for (const auto& path : paths) best = std::min(best, length(path));
      int sigma = 0;
      std::map<DeviceId, int> through;
      for (const auto& path : paths) {
        if (length(path) > best + kEps) continue;
        ++sigma;
        for (std::size_t k = 1; k + 1 < path.size(); ++k) through[path[k]] += 1;
      }
      for (const auto& [v, count] : through) {
        score[v] += static_cast<double>(count) / sigma;
      }
    }
  }
  return score;
}

}  // namespace fogtest

#endif  // FOGCOLONY_TESTS_FIXTURES_HPP
