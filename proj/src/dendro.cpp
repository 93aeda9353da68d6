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

#include "fogcolony/dendro.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fogcolony {

namespace {

struct LinkStats {
  double latency_sum = 0.0;
  int link_count = 0;
  double average() const { return latency_sum / link_count; }
};

void fill_descendants(Dendrogram& dendro) {
  dendro.descendants_.assign(dendro.nodes.size(), {});
  // Children always have smaller ids than their parent (merge order), so a
  // single ascending pass suffices.
  for (int id = 0; id < dendro.size(); ++id) {
    auto& out = dendro.descendants_[id];
    if (dendro.nodes[id].children) {
      auto [l, r] = *dendro.nodes[id].children;
      out = dendro.descendants_[l];
      out.insert(out.end(), dendro.descendants_[r].begin(), dendro.descendants_[r].end());
    }
    out.push_back(id);
    std::sort(out.begin(), out.end());
  }
}

}  // namespace

Dendrogram build_dendrogram(const Infrastructure& infra) {
  if (!infra.connected()) throw std::invalid_argument("infrastructure must be connected");
  const int n = infra.size();

  Dendrogram dendro;
  dendro.device_count = n;
  dendro.nodes.reserve(2 * n - 1);
  for (int i = 0; i < n; ++i) {
    CandidateColony leaf;
    leaf.id = i;
    leaf.devices = {i};
    dendro.nodes.push_back(std::move(leaf));
  }

  // Pairwise stats for adjacent active clusters, keyed by (low id, high id).
  std::map<std::pair<int, int>, LinkStats> adjacent;
  for (const auto& link : infra.links()) {
    auto key = std::minmax(link.a, link.b);
    auto& stats = adjacent[key];
    stats.latency_sum += link.latency;
    stats.link_count += 1;
  }
  std::set<int> active;
  for (int i = 0; i < n; ++i) active.insert(i);

  int step = 1;
  while (static_cast<int>(active.size()) > 1) {
    auto best = adjacent.end();
    for (auto it = adjacent.begin(); it != adjacent.end(); ++it) {
      if (best == adjacent.end() || it->second.average() < best->second.average()) best = it;
      // std::map iteration is ascending over (low, high) pairs, so equal
      // averages already resolve to the smallest pair.
    }
    if (best == adjacent.end()) {
      throw std::invalid_argument("no adjacent cluster pair left; graph is disconnected");
    }
    const auto [left, right] = best->first;

    CandidateColony merged;
    merged.id = static_cast<int>(dendro.nodes.size());
    merged.children = {left, right};
    merged.height = step++;
    std::merge(dendro.nodes[left].devices.begin(), dendro.nodes[left].devices.end(),
               dendro.nodes[right].devices.begin(), dendro.nodes[right].devices.end(),
               std::back_inserter(merged.devices));
    dendro.nodes[left].parent = merged.id;
    dendro.nodes[right].parent = merged.id;

    // Fold both old clusters' adjacencies into the merged one.
    std::map<int, LinkStats> folded;
    for (auto it = adjacent.begin(); it != adjacent.end();) {
      const auto [a, b] = it->first;
      if (a == left || a == right || b == left || b == right) {
        const int other = (a == left || a == right) ? b : a;
        if (other != left && other != right) {
          auto& stats = folded[other];
          stats.latency_sum += it->second.latency_sum;
          stats.link_count += it->second.link_count;
        }
        it = adjacent.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& [other, stats] : folded) {
      adjacent[std::minmax(other, merged.id)] = stats;
    }

    active.erase(left);
    active.erase(right);
    active.insert(merged.id);
    dendro.nodes.push_back(std::move(merged));
  }

  dendro.root = *active.begin();
  fill_descendants(dendro);
  return dendro;
}

void assign_coordinators(Dendrogram& dendro, const Infrastructure& infra) {
  for (auto& node : dendro.nodes) {
    if (node.devices.size() == 1) {
      node.coordinator = node.devices.front();
      continue;
    }
    const auto scores = betweenness(infra, node.devices);
    DeviceId best = node.devices.front();
    double best_score = scores.at(best);
    for (DeviceId d : node.devices) {
      const double s = scores.at(d);
      if (s > best_score) {
        best = d;
        best_score = s;
      }
    }
    node.coordinator = best;
  }
}

Dendrogram build_dendrogram_with_coordinators(const Infrastructure& infra) {
  Dendrogram dendro = build_dendrogram(infra);
  assign_coordinators(dendro, infra);
  return dendro;
}

namespace {

void format_node(const Dendrogram& dendro, int id, int depth, std::ostringstream& out) {
  const auto& node = dendro.node(id);
  for (int i = 0; i < depth; ++i) out << "  ";
  out << "C" << id << " {";
  for (std::size_t i = 0; i < node.devices.size(); ++i) {
    if (i > 0) out << ",";
    out << "f" << node.devices[i];
  }
  out << "}";
  if (node.coordinator >= 0) out << " coord=f" << node.coordinator;
  out << "\n";
  if (node.children) {
    format_node(dendro, node.children->first, depth + 1, out);
    format_node(dendro, node.children->second, depth + 1, out);
  }
}

}  // namespace

std::string format_dendrogram(const Dendrogram& dendro) {
  std::ostringstream out;
  format_node(dendro, dendro.root, 0, out);
  return out.str();
}

}  // namespace fogcolony
