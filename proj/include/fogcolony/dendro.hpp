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

#ifndef FOGCOLONY_DENDRO_HPP
#define FOGCOLONY_DENDRO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fogcolony/infra.hpp"

namespace fogcolony {

/// One node of the dendrogram: a candidate fog colony. Leaves hold a single
/// device; an internal node's device set is the disjoint union of its
/// children's. Every candidate's device set induces a connected subgraph.
struct CandidateColony {
  int id = 0;
  std::vector<DeviceId> devices;  // sorted
  std::optional<std::pair<int, int>> children;
  std::optional<int> parent;
  DeviceId coordinator = -1;  // set by assign_coordinators
  int height = 0;             // merge step; leaves are 0
};

/// Binary cluster tree over the fog devices. Node ids: leaves 0..|F|-1
/// match device ids, internal nodes |F|..2|F|-2 in merge order, so the
/// root is node 2|F|-2.
struct Dendrogram {
  std::vector<CandidateColony> nodes;
  int root = -1;
  int device_count = 0;

  const CandidateColony& node(int id) const { return nodes.at(id); }
  int size() const { return static_cast<int>(nodes.size()); }
  /// Subtree node ids (including `id` itself), ascending.
  const std::vector<int>& descendants(int id) const { return descendants_.at(id); }

  std::vector<std::vector<int>> descendants_;  // filled by build_dendrogram
};

/// Agglomerative clustering of the infrastructure graph where only cluster
/// pairs joined by at least one physical link may merge; at each step the
/// adjacent pair with minimum average inter-cluster link latency merges,
/// ties broken by the smallest (id, id) pair. Every candidate colony is
/// therefore connected. Deterministic for a given infrastructure.
Dendrogram build_dendrogram(const Infrastructure& infra);

/// Sets each candidate's coordinator to the device with maximal betweenness
/// centrality on the colony-induced subgraph, ties broken by lowest id.
void assign_coordinators(Dendrogram& dendro, const Infrastructure& infra);

/// Convenience: build_dendrogram followed by assign_coordinators.
Dendrogram build_dendrogram_with_coordinators(const Infrastructure& infra);

/// Nested text rendering of the tree, for debugging and visualization.
std::string format_dendrogram(const Dendrogram& dendro);

}  // namespace fogcolony

#endif  // FOGCOLONY_DENDRO_HPP
