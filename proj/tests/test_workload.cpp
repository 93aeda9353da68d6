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

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <set>

#include "fixtures.hpp"
#include "fogcolony/workload.hpp"

using namespace fogcolony;

namespace {

Infrastructure gateway_infra(std::uint64_t seed = 7) {
  TopologyParams params;
  params.devices = 100;
  return generate_topology(params, seed);
}

}  // namespace

TEST_CASE("generate_workload respects the configured ranges") {
  const auto infra = gateway_infra();
  WorkloadParams params;  // defaults: 20 apps, [2,5] services, req [1,2]
  const auto workload = generate_workload(infra, params, 11);
  CHECK(workload.apps.size() == 20);
  std::set<DeviceId> gateways;
  for (DeviceId g : infra.gateways()) gateways.insert(g);
  for (const auto& app : workload.apps) {
    CHECK(app.services.size() >= 2);
    CHECK(app.services.size() <= 5);
    CHECK(app.requests.size() == app.services.size() - 1);
    for (const auto& svc : app.services) {
      CHECK(svc.resource_req >= 1.0);
      CHECK(svc.resource_req <= 2.0);
    }
  }
  for (const auto& user : workload.users) {
    CHECK(gateways.count(user.gateway_device) == 1);
    CHECK(user.request_rate >= 1.0 / 10.0);
    CHECK(user.request_rate <= 1.0 / 5.0);
  }
}

TEST_CASE("popularity zero yields zero users") {
  const auto infra = gateway_infra();
  WorkloadParams params;
  params.popularity_max = 0.0;
  const auto workload = generate_workload(infra, params, 3);
  CHECK(workload.users.empty());
}

TEST_CASE("workload generation requires gateways") {
  const auto no_gw = fogtest::make_infra(3, {{0, 1, 2.0}, {1, 2, 2.0}}, {});
  CHECK_THROWS_AS(generate_workload(no_gw, WorkloadParams{}, 1), std::invalid_argument);
}

TEST_CASE("user count stays inside the binomial band") {
  // 25 gateways x 20 apps, acceptance probability p~U[0,0.75] accepted with
  // probability p: mean 25*20*0.375 = 187.5. Aggregated over 40 seeds the
  // sample mean stays well within 3 sigma of the expectation.
  const auto infra = gateway_infra();
  WorkloadParams params;
  const int runs = 40;
  double total = 0.0;
  for (int seed = 0; seed < runs; ++seed) {
    total += static_cast<double>(generate_workload(infra, params, seed).users.size());
  }
  const double trials = 25.0 * 20.0;
  const double p = 0.75 / 2.0;
  const double mean = trials * p;
  const double sigma = std::sqrt(trials * p * (1 - p) / runs);
  CHECK(total / runs > mean - 3 * sigma);
  CHECK(total / runs < mean + 3 * sigma);
}

TEST_CASE("app_request_pairs walks the tree root-first") {
  Application chain;
  chain.id = 0;
  chain.services = {{0, 0, 1.0}, {1, 0, 1.0}, {2, 0, 1.0}};
  chain.requests = {{1, 2}, {0, 1}};  // stored order is irrelevant
  chain.root_service = 0;
  const auto pairs = app_request_pairs(chain);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::pair<int, int>{0, 1});
  CHECK(pairs[1] == std::pair<int, int>{1, 2});

  Application single;
  single.id = 1;
  single.services = {{5, 1, 1.0}};
  single.root_service = 5;
  CHECK(app_request_pairs(single).empty());
}

TEST_CASE("generated app trees have |services|-1 pairs") {
  const auto infra = gateway_infra();
  const auto workload = generate_workload(infra, WorkloadParams{}, 19);
  for (const auto& app : workload.apps) {
    CHECK(app_request_pairs(app).size() == app.services.size() - 1);
  }
}

TEST_CASE("catalog popularity counts users per application") {
  const auto infra = gateway_infra();
  const auto workload = generate_workload(infra, WorkloadParams{}, 19);
  const auto catalog = build_catalog(workload);
  std::vector<int> expected(workload.apps.size(), 0);
  for (const auto& user : workload.users) expected[user.app_id] += 1;
  for (const auto& app : workload.apps) {
    for (const auto& svc : app.services) {
      CHECK(catalog.popularity.at(svc.id) == expected[app.id]);
      CHECK(catalog.app_of.at(svc.id) == app.id);
    }
    CHECK(catalog.parent_of.at(app.root_service) == -1);
  }
}
