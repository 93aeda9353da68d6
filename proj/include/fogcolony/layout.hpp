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

#ifndef FOGCOLONY_LAYOUT_HPP
#define FOGCOLONY_LAYOUT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fogcolony/dendro.hpp"

namespace fogcolony {

/// Bit vector over dendrogram nodes; bit i selects candidate colony i.
/// A chromosome is valid when the selected candidates' device sets
/// partition the full device set.
struct Chromosome {
  std::vector<std::uint8_t> selected;

  bool operator==(const Chromosome& other) const = default;
  std::vector<int> selected_nodes() const;  // ascending node ids
  std::string to_string() const;            // "0101..." in node-id order
  static Chromosome from_string(const std::string& bits);
};

struct ValidityReport {
  bool valid = false;
  std::vector<DeviceId> duplicated;  // devices covered more than once
  std::vector<DeviceId> missing;     // devices not covered at all
};

/// Checks the partition constraint; throws std::invalid_argument on a
/// length mismatch with the dendrogram.
ValidityReport is_valid(const Chromosome& c, const Dendrogram& d);

/// Repairs toward fewer, larger colonies: containers win over contained
/// selections, and each uncovered device is grouped with the selection
/// adjacent to it in the tree (the parent of its highest fully-uncovered
/// ancestor absorbs any selections inside it). Idempotent.
Chromosome repair_agglomerative(Chromosome c, const Dendrogram& d);

/// Repairs toward more, smaller colonies: contained selections win over
/// containers, and each uncovered device selects its highest fully-uncovered
/// ancestor. Idempotent.
Chromosome repair_divisive(Chromosome c, const Dendrogram& d);

/// Sub-tree crossover: picks a uniformly random dendrogram node and swaps
/// the bit values of its whole subtree between the two parents. Children
/// may be invalid; callers repair separately.
std::pair<Chromosome, Chromosome> crossover_subtree(const Chromosome& a, const Chromosome& b,
                                                    const Dendrogram& d, std::mt19937_64& rng);

/// Replaces a uniformly chosen selected colony by its parent. Unchanged
/// when only the root is selected.
Chromosome mutate_join(Chromosome c, const Dendrogram& d, std::mt19937_64& rng);

/// Splits a uniformly chosen selected colony into its two children.
/// Unchanged when all selected colonies are leaves.
Chromosome mutate_split(Chromosome c, const Dendrogram& d, std::mt19937_64& rng);

/// Random valid chromosome: walk top-down from the root and, with
/// probability split_prob, descend into both children instead of selecting
/// the current node. Always valid by construction.
Chromosome random_layout(const Dendrogram& d, double split_prob, std::mt19937_64& rng);

}  // namespace fogcolony

#endif  // FOGCOLONY_LAYOUT_HPP
