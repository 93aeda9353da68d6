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

#include <set>
#include <stdexcept>

#include "fixtures.hpp"
#include "fogcolony/infra.hpp"

using namespace fogcolony;

TEST_CASE("generate_topology matches the reference scenario shape") {
  TopologyParams params;  // defaults: 100 devices, m=2, 25% gateways
  const auto infra = generate_topology(params, 7);
  CHECK(infra.size() == 100);
  CHECK(infra.gateways().size() == 25);
  CHECK(infra.connected());
  for (const auto& link : infra.links()) {
    CHECK(link.latency >= 2.0);
    CHECK(link.latency <= 6.0);
  }
  for (const auto& dev : infra.devices()) {
    CHECK(dev.resource_capacity >= 1.0);
    CHECK(dev.resource_capacity <= 4.0);
  }
}

TEST_CASE("generate_topology rejects degenerate parameters") {
  TopologyParams params;
  params.devices = 1;
  params.attach_m = 1;
  CHECK_THROWS_AS(generate_topology(params, 1), std::invalid_argument);

  params = TopologyParams{};
  params.latency_min = 6.0;
  params.latency_max = 2.0;
  CHECK_THROWS_AS(generate_topology(params, 1), std::invalid_argument);

  params = TopologyParams{};
  params.gateway_fraction = 1.5;
  CHECK_THROWS_AS(generate_topology(params, 1), std::invalid_argument);
}

TEST_CASE("generate_topology with m=1 grows a tree") {
  TopologyParams params;
  params.devices = 9;
  params.attach_m = 1;
  const auto infra = generate_topology(params, 42);
  CHECK(infra.links().size() == 8);  // n-1 links and connected: a tree
  CHECK(infra.connected());
}

TEST_CASE("generate_topology is deterministic and gateway counts are exact") {
  TopologyParams params;
  params.devices = 40;
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    const auto a = generate_topology(params, seed);
    const auto b = generate_topology(params, seed);
    CHECK(a.links().size() == b.links().size());
    for (std::size_t i = 0; i < a.links().size(); ++i) {
      CHECK(a.links()[i].a == b.links()[i].a);
      CHECK(a.links()[i].b == b.links()[i].b);
      CHECK(a.links()[i].latency == b.links()[i].latency);
    }
    CHECK(a.gateways() == b.gateways());
    CHECK(a.gateways().size() == 10);
    CHECK(a.connected());
  }
}

TEST_CASE("shortest_lat on a line adds the link latencies") {
  const auto infra = fogtest::make_infra(3, {{0, 1, 2.0}, {1, 2, 3.0}}, {});
  CHECK(*shortest_lat(infra, 0, 2) == doctest::Approx(5.0));
  CHECK(*shortest_lat(infra, 0, 0) == 0.0);
}

TEST_CASE("shortest_lat respects the restriction set") {
  // Square with a cheap detour: 0-1-2 direct is 10, via 3 it is 4.
  const auto infra =
      fogtest::make_infra(4, {{0, 1, 5.0}, {1, 2, 5.0}, {0, 3, 2.0}, {3, 2, 2.0}}, {});
  CHECK(*shortest_lat(infra, 0, 2) == doctest::Approx(4.0));
  const std::vector<DeviceId> no_detour = {0, 1, 2};
  CHECK(*shortest_lat(infra, 0, 2, &no_detour) == doctest::Approx(10.0));
  const std::vector<DeviceId> detour_only = {0, 3};
  CHECK(shortest_lat(infra, 0, 3, &detour_only).has_value());
  const std::vector<DeviceId> unreachable = {0, 2};
  CHECK_FALSE(shortest_lat(infra, 0, 2, &unreachable).has_value());
  CHECK_THROWS_AS(shortest_lat(infra, 0, 1, &detour_only), std::invalid_argument);
}

TEST_CASE("shortest_lat agrees with exhaustive path enumeration") {
  TopologyParams params;
  params.devices = 9;
  params.attach_m = 2;
  for (std::uint64_t seed : {3ULL, 11ULL, 29ULL}) {
    const auto infra = generate_topology(params, seed);
    for (DeviceId a = 0; a < infra.size(); ++a) {
      for (DeviceId b = a; b < infra.size(); ++b) {
        const auto expected = fogtest::brute_shortest(infra, a, b, {});
        const auto actual = shortest_lat(infra, a, b);
        REQUIRE(actual.has_value());
        CHECK(*actual == doctest::Approx(*expected).epsilon(1e-12));
        // Symmetry.
        CHECK(*shortest_lat(infra, b, a) == doctest::Approx(*actual).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("shortest_lat restricted to all devices equals unrestricted") {
  TopologyParams params;
  params.devices = 12;
  const auto infra = generate_topology(params, 5);
  std::vector<DeviceId> everyone;
  for (int i = 0; i < infra.size(); ++i) everyone.push_back(i);
  for (DeviceId a = 0; a < infra.size(); ++a) {
    for (DeviceId b = 0; b < infra.size(); ++b) {
      CHECK(*shortest_lat(infra, a, b, &everyone) == *shortest_lat(infra, a, b));
    }
  }
}

TEST_CASE("shortest_lat satisfies the triangle inequality") {
  TopologyParams params;
  params.devices = 10;
  const auto infra = generate_topology(params, 17);
  for (DeviceId a = 0; a < infra.size(); ++a) {
    for (DeviceId b = 0; b < infra.size(); ++b) {
      for (DeviceId c = 0; c < infra.size(); ++c) {
        CHECK(*shortest_lat(infra, a, c) <=
              *shortest_lat(infra, a, b) + *shortest_lat(infra, b, c) + 1e-9);
      }
    }
  }
}

TEST_CASE("betweenness: star center dominates, singleton scores zero") {
  const auto star = fogtest::make_infra(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}}, {});
  const auto scores = betweenness(star, {0, 1, 2, 3});
  CHECK(scores.at(0) > scores.at(1));
  CHECK(scores.at(0) > scores.at(2));
  CHECK(scores.at(0) > scores.at(3));
  CHECK(scores.at(0) == doctest::Approx(3.0));  // all three pairs cross the hub

  const auto single = betweenness(star, {2});
  CHECK(single.size() == 1);
  CHECK(single.at(2) == 0.0);
}

TEST_CASE("betweenness rejects a disconnected member set") {
  const auto infra = fogtest::make_infra(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}}, {});
  CHECK_THROWS_AS((betweenness(infra, {0, 3})), std::invalid_argument);
}

TEST_CASE("betweenness agrees with brute-force path counting") {
  TopologyParams params;
  params.devices = 9;
  for (std::uint64_t seed : {2ULL, 8ULL}) {
    const auto infra = generate_topology(params, seed);
    std::vector<DeviceId> members;
    for (int i = 0; i < infra.size(); ++i) members.push_back(i);
    const auto fast = betweenness(infra, members);
    const auto slow = fogtest::brute_betweenness(infra, members);
    for (DeviceId d : members) {
      CHECK(fast.at(d) == doctest::Approx(slow.at(d)).epsilon(1e-9));
    }
  }
  // Equal-latency grid: multiple shortest paths must split credit.
  const auto grid = fogtest::make_infra(
      4, {{0, 1, 1.0}, {1, 3, 1.0}, {0, 2, 1.0}, {2, 3, 1.0}}, {});
  const auto fast = betweenness(grid, {0, 1, 2, 3});
  const auto slow = fogtest::brute_betweenness(grid, {0, 1, 2, 3});
  for (DeviceId d : {0, 1, 2, 3}) {
    CHECK(fast.at(d) == doctest::Approx(slow.at(d)).epsilon(1e-9));
  }
  CHECK(fast.at(1) == doctest::Approx(0.5));  // half of the 0-3 traffic
}

TEST_CASE("distance tables match the scalar query") {
  TopologyParams params;
  params.devices = 15;
  const auto infra = generate_topology(params, 23);
  const DistanceTable table(infra);
  for (DeviceId a = 0; a < infra.size(); ++a) {
    for (DeviceId b = 0; b < infra.size(); ++b) {
      CHECK(table.at(a, b) == *shortest_lat(infra, a, b));
    }
  }
  const std::vector<DeviceId> members = {0, 1, 2, 3, 4};
  // Only run the sub-table when the members already induce a connected
  // subgraph for this seed.
  bool connected = true;
  for (DeviceId a : members) {
    if (!fogtest::brute_shortest(infra, members[0], a,
                                 std::set<DeviceId>(members.begin(), members.end()))) {
      connected = false;
    }
  }
  if (connected) {
    const SubgraphDistances sub(infra, members);
    for (DeviceId a : members) {
      for (DeviceId b : members) {
        CHECK(sub.at(a, b) == doctest::Approx(*shortest_lat(infra, a, b, &members)));
      }
    }
  }
}
