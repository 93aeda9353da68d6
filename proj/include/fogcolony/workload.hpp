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

#ifndef FOGCOLONY_WORKLOAD_HPP
#define FOGCOLONY_WORKLOAD_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fogcolony/infra.hpp"

namespace fogcolony {

struct Service {
  int id = 0;  // globally unique across the workload
  int app_id = 0;
  double resource_req = 0.0;
};

/// Multi-service application: services connected by directed request edges
/// forming a tree rooted at root_service.
struct Application {
  int id = 0;
  std::vector<Service> services;
  std::vector<std::pair<int, int>> requests;  // (from service, to service)
  int root_service = 0;
};

struct User {
  int id = 0;
  int app_id = 0;
  DeviceId gateway_device = 0;
  double request_rate = 0.0;  // requests per ms; kept for the model, unused by fitness
};

struct Workload {
  std::vector<Application> apps;
  std::vector<User> users;

  int total_services() const;
};

struct WorkloadParams {
  int apps = 20;
  int services_min = 2;
  int services_max = 5;
  double req_min = 1.0;
  double req_max = 2.0;
  double popularity_max = 0.75;
  double inter_request_min = 5.0;  // ms between requests
  double inter_request_max = 10.0;
};

/// Generates applications as random trees (each new service attaches to a
/// uniformly chosen earlier one) and users per (gateway, app) pair: a
/// popularity p ~ U[0, popularity_max] is drawn and a user is created with
/// probability p. Deterministic per seed. Throws std::invalid_argument if
/// the infrastructure has no gateways or a range is invalid.
Workload generate_workload(const Infrastructure& infra, const WorkloadParams& params,
                           std::uint64_t seed);

/// Request pairs of an application in deterministic order: breadth-first
/// from the root, children in ascending service-id order.
std::vector<std::pair<int, int>> app_request_pairs(const Application& app);

/// Flat per-service lookup tables derived from a workload, shared by the
/// placement and fitness pipelines.
struct ServiceCatalog {
  std::vector<double> resource_req;                    // by service id
  std::vector<int> app_of;                             // by service id
  std::vector<int> parent_of;                          // by service id; -1 for roots
  std::vector<int> popularity;                         // users of the service's app
  std::vector<int> root_of_app;                        // by app id
  std::vector<std::vector<std::pair<int, int>>> pairs; // by app id, app_request_pairs order
  std::vector<std::vector<DeviceId>> gateways_of_app;  // sorted unique user gateways
  int service_count = 0;
};

ServiceCatalog build_catalog(const Workload& workload);

}  // namespace fogcolony

#endif  // FOGCOLONY_WORKLOAD_HPP
