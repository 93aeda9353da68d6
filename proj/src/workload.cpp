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

#include "fogcolony/workload.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

namespace fogcolony {

int Workload::total_services() const {
  int count = 0;
  for (const auto& app : apps) count += static_cast<int>(app.services.size());
  return count;
}

Workload generate_workload(const Infrastructure& infra, const WorkloadParams& params,
                           std::uint64_t seed) {
  if (params.apps < 1) throw std::invalid_argument("need at least one application");
  if (params.services_min < 1 || params.services_max < params.services_min) {
    throw std::invalid_argument("invalid services-per-app range");
  }
  if (!(params.req_min > 0.0) || params.req_max < params.req_min) {
    throw std::invalid_argument("invalid service resource range");
  }
  if (params.popularity_max < 0.0 || params.popularity_max > 1.0) {
    throw std::invalid_argument("popularity_max must lie in [0, 1]");
  }
  if (!(params.inter_request_min > 0.0) || params.inter_request_max < params.inter_request_min) {
    throw std::invalid_argument("invalid inter-request time range");
  }
  const std::vector<DeviceId> gateways = infra.gateways();
  if (gateways.empty()) throw std::invalid_argument("infrastructure has no gateway devices");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count_dist(params.services_min, params.services_max);
  std::uniform_real_distribution<double> req_dist(params.req_min, params.req_max);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> popularity_dist(0.0, params.popularity_max);
  std::uniform_real_distribution<double> inter_dist(params.inter_request_min,
                                                    params.inter_request_max);

  Workload out;
  int next_service = 0;
  for (int a = 0; a < params.apps; ++a) {
    Application app;
    app.id = a;
    const int k = count_dist(rng);
    const int base = next_service;
    for (int j = 1; j < k; ++j) {
      std::uniform_int_distribution<int> parent_dist(0, j - 1);
      app.requests.emplace_back(base + parent_dist(rng), base + j);
    }
    for (int j = 0; j < k; ++j) {
      app.services.push_back({base + j, a, req_dist(rng)});
    }
    app.root_service = base;
    next_service += k;
    out.apps.push_back(std::move(app));
  }

  int next_user = 0;
  for (DeviceId gw : gateways) {
    for (int a = 0; a < params.apps; ++a) {
      const double p = popularity_dist(rng);
      if (unit(rng) < p) {
        out.users.push_back({next_user++, a, gw, 1.0 / inter_dist(rng)});
      }
    }
  }
  return out;
}

std::vector<std::pair<int, int>> app_request_pairs(const Application& app) {
  std::map<int, std::vector<int>> children;
  for (const auto& [from, to] : app.requests) children[from].push_back(to);
  for (auto& [from, kids] : children) {
    (void)from;
    std::sort(kids.begin(), kids.end());
  }
  std::vector<std::pair<int, int>> out;
  std::queue<int> frontier;
  frontier.push(app.root_service);
  while (!frontier.empty()) {
    int s = frontier.front();
    frontier.pop();
    auto it = children.find(s);
    if (it == children.end()) continue;
    for (int child : it->second) {
      out.emplace_back(s, child);
      frontier.push(child);
    }
  }
  return out;
}

ServiceCatalog build_catalog(const Workload& workload) {
  ServiceCatalog cat;
  cat.service_count = workload.total_services();
  cat.resource_req.assign(cat.service_count, 0.0);
  cat.app_of.assign(cat.service_count, -1);
  cat.parent_of.assign(cat.service_count, -1);
  cat.popularity.assign(cat.service_count, 0);
  cat.root_of_app.assign(workload.apps.size(), -1);
  cat.pairs.resize(workload.apps.size());
  cat.gateways_of_app.resize(workload.apps.size());

  for (const auto& app : workload.apps) {
    for (const auto& svc : app.services) {
      cat.resource_req.at(svc.id) = svc.resource_req;
      cat.app_of.at(svc.id) = app.id;
    }
    cat.root_of_app.at(app.id) = app.root_service;
    cat.pairs.at(app.id) = app_request_pairs(app);
    for (const auto& [from, to] : cat.pairs[app.id]) cat.parent_of.at(to) = from;
  }

  std::vector<int> users_per_app(workload.apps.size(), 0);
  for (const auto& user : workload.users) {
    users_per_app.at(user.app_id) += 1;
    cat.gateways_of_app.at(user.app_id).push_back(user.gateway_device);
  }
  for (auto& gws : cat.gateways_of_app) {
    std::sort(gws.begin(), gws.end());
    gws.erase(std::unique(gws.begin(), gws.end()), gws.end());
  }
  for (int s = 0; s < cat.service_count; ++s) {
    cat.popularity[s] = users_per_app.at(cat.app_of[s]);
  }
  return cat;
}

}  // namespace fogcolony
