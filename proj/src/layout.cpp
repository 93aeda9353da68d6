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

#include "fogcolony/layout.hpp"

#include <algorithm>
#include <stdexcept>

namespace fogcolony {

namespace {

void check_length(const Chromosome& c, const Dendrogram& d) {
  if (static_cast<int>(c.selected.size()) != d.size()) {
    throw std::invalid_argument("chromosome length does not match the dendrogram");
  }
}

// Highest ancestor of the device's leaf whose device set contains no
// covered device. Falls back to the leaf itself (never fails: an uncovered
// device's leaf qualifies).
int highest_uncovered_ancestor(const Dendrogram& d, DeviceId device,
                               const std::vector<char>& covered) {
  int node = device;  // leaf ids equal device ids
  while (d.node(node).parent) {
    const int parent = *d.node(node).parent;
    bool clean = true;
    for (DeviceId dev : d.node(parent).devices) {
      if (covered[dev]) {
        clean = false;
        break;
      }
    }
    if (!clean) break;
    node = parent;
  }
  return node;
}

void select_and_absorb(Chromosome& c, const Dendrogram& d, int node, std::vector<char>& covered) {
  for (int inner : d.descendants(node)) c.selected[inner] = 0;
  c.selected[node] = 1;
  for (DeviceId dev : d.node(node).devices) covered[dev] = 1;
}

std::vector<char> coverage_of(const Chromosome& c, const Dendrogram& d) {
  std::vector<char> covered(d.device_count, 0);
  for (int id = 0; id < d.size(); ++id) {
    if (!c.selected[id]) continue;
    for (DeviceId dev : d.node(id).devices) covered[dev] = 1;
  }
  return covered;
}

}  // namespace

std::vector<int> Chromosome::selected_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(selected.size()); ++i) {
    if (selected[i]) out.push_back(i);
  }
  return out;
}

std::string Chromosome::to_string() const {
  std::string out(selected.size(), '0');
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (selected[i]) out[i] = '1';
  }
  return out;
}

Chromosome Chromosome::from_string(const std::string& bits) {
  Chromosome c;
  c.selected.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("chromosome string must be 0/1");
    c.selected.push_back(ch == '1' ? 1 : 0);
  }
  return c;
}

ValidityReport is_valid(const Chromosome& c, const Dendrogram& d) {
  check_length(c, d);
  std::vector<int> count(d.device_count, 0);
  for (int id = 0; id < d.size(); ++id) {
    if (!c.selected[id]) continue;
    for (DeviceId dev : d.node(id).devices) count[dev] += 1;
  }
  ValidityReport report;
  for (DeviceId dev = 0; dev < d.device_count; ++dev) {
    if (count[dev] == 0) report.missing.push_back(dev);
    if (count[dev] > 1) report.duplicated.push_back(dev);
  }
  report.valid = report.missing.empty() && report.duplicated.empty();
  return report;
}

Chromosome repair_agglomerative(Chromosome c, const Dendrogram& d) {
  check_length(c, d);
  // Container/content conflicts: the container keeps the selection.
  for (int id = 0; id < d.size(); ++id) {
    if (!c.selected[id]) continue;
    int node = id;
    while (d.node(node).parent) {
      node = *d.node(node).parent;
      if (c.selected[node]) {
        c.selected[id] = 0;
        break;
      }
    }
  }
  // Group every uncovered device with the selections next to it in the
  // tree: the parent of its highest fully-uncovered ancestor absorbs the
  // selections contained in it (tree nesting guarantees there is no
  // partial overlap to break).
  std::vector<char> covered = coverage_of(c, d);
  for (DeviceId dev = 0; dev < d.device_count; ++dev) {
    if (covered[dev]) continue;
    const int anchor = highest_uncovered_ancestor(d, dev, covered);
    const auto& parent = d.node(anchor).parent;
    select_and_absorb(c, d, parent ? *parent : anchor, covered);
  }
  return c;
}

Chromosome repair_divisive(Chromosome c, const Dendrogram& d) {
  check_length(c, d);
  // Container/content conflicts: the contained selections keep theirs.
  std::vector<char> keep(c.selected.begin(), c.selected.end());
  for (int id = 0; id < d.size(); ++id) {
    if (!c.selected[id] || !d.node(id).children) continue;
    for (int inner : d.descendants(id)) {
      if (inner != id && c.selected[inner]) {
        keep[id] = 0;
        break;
      }
    }
  }
  std::copy(keep.begin(), keep.end(), c.selected.begin());
  // Cover each gap with the highest fully-uncovered ancestor.
  std::vector<char> covered = coverage_of(c, d);
  for (DeviceId dev = 0; dev < d.device_count; ++dev) {
    if (covered[dev]) continue;
    select_and_absorb(c, d, highest_uncovered_ancestor(d, dev, covered), covered);
  }
  return c;
}

std::pair<Chromosome, Chromosome> crossover_subtree(const Chromosome& a, const Chromosome& b,
                                                    const Dendrogram& d, std::mt19937_64& rng) {
  check_length(a, d);
  check_length(b, d);
  std::uniform_int_distribution<int> pick(0, d.size() - 1);
  const int node = pick(rng);
  Chromosome child1 = a;
  Chromosome child2 = b;
  for (int idx : d.descendants(node)) std::swap(child1.selected[idx], child2.selected[idx]);
  return {std::move(child1), std::move(child2)};
}

Chromosome mutate_join(Chromosome c, const Dendrogram& d, std::mt19937_64& rng) {
  check_length(c, d);
  std::vector<int> candidates;
  for (int id : c.selected_nodes()) {
    if (d.node(id).parent) candidates.push_back(id);
  }
  if (candidates.empty()) return c;
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  const int node = candidates[pick(rng)];
  c.selected[node] = 0;
  c.selected[*d.node(node).parent] = 1;
  return c;
}

Chromosome mutate_split(Chromosome c, const Dendrogram& d, std::mt19937_64& rng) {
  check_length(c, d);
  std::vector<int> candidates;
  for (int id : c.selected_nodes()) {
    if (d.node(id).children) candidates.push_back(id);
  }
  if (candidates.empty()) return c;
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  const int node = candidates[pick(rng)];
  c.selected[node] = 0;
  c.selected[d.node(node).children->first] = 1;
  c.selected[d.node(node).children->second] = 1;
  return c;
}

Chromosome random_layout(const Dendrogram& d, double split_prob, std::mt19937_64& rng) {
  if (split_prob < 0.0 || split_prob > 1.0) {
    throw std::invalid_argument("split_prob must lie in [0, 1]");
  }
  Chromosome c;
  c.selected.assign(d.size(), 0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Preorder walk; explicit stack keeps the draw order fixed.
  std::vector<int> stack = {d.root};
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    if (d.node(node).children && unit(rng) < split_prob) {
      stack.push_back(d.node(node).children->second);
      stack.push_back(d.node(node).children->first);
    } else {
      c.selected[node] = 1;
    }
  }
  return c;
}

}  // namespace fogcolony
