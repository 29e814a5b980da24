// Copyright 2026 The planarflow Authors.
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

#include "planarflow/cut_oracle.hpp"

#include <algorithm>
#include <bit>

namespace planarflow {

CutIndex::CutIndex(const PlanarInstance& inst) : vertices_(inst.vertices) {
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.size() > 31)
    throw CutBudgetExceeded("cut index supports at most 31 vertices");
  adjacency_.assign(vertices_.size(), 0);
  for (const SupplyEdge& e : inst.edges) {
    std::size_t u = index(e.u), v = index(e.v);
    supply_.push_back({(1u << u) | (1u << v), e.capacity});
    adjacency_[u] |= 1u << v;
    adjacency_[v] |= 1u << u;
  }
  for (const Demand& d : inst.demands)
    requests_.push_back({(1u << index(d.s)) | (1u << index(d.t)), d.request});
}

std::size_t CutIndex::index(const VertexId& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw InstanceError("unknown vertex '" + v + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::uint32_t CutIndex::mask_of(const std::vector<VertexId>& side) const {
  std::uint32_t mask = 0;
  for (const VertexId& v : side) mask |= 1u << index(v);
  return mask;
}

std::vector<VertexId> CutIndex::side_of(std::uint32_t mask) const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (mask & (1u << i)) out.push_back(vertices_[i]);
  return out;
}

CutValues CutIndex::values(std::uint32_t mask) const {
  CutValues out;
  for (const Link& l : supply_)
    if (std::popcount(l.ends & mask) == 1) out.capacity_across += l.weight;
  for (const Link& l : requests_)
    if (std::popcount(l.ends & mask) == 1) out.request_across += l.weight;
  return out;
}

bool CutIndex::induces_connected(std::uint32_t mask) const {
  if (mask == 0) return false;
  std::uint32_t seen = mask & (~mask + 1);  // lowest set bit
  std::uint32_t frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1)
      next |= adjacency_[static_cast<std::size_t>(std::countr_zero(f))];
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

bool CutIndex::central(std::uint32_t mask) const {
  const std::uint32_t full = (1u << vertices_.size()) - 1;
  return induces_connected(mask) && induces_connected(full & ~mask);
}

namespace {

void require_proper(const CutIndex& index, std::uint32_t mask) {
  const std::uint32_t full = (1u << index.vertex_count()) - 1;
  if (mask == 0 || mask == full)
    throw InstanceError("cut side must be a proper nonempty subset of V");
}

// Lexicographic order on sorted index lists, i.e. on bit positions.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  while (a && b) {
    int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace

CutValues cut_values(const PlanarInstance& inst,
                     const std::vector<VertexId>& side) {
  CutIndex index(inst);
  std::uint32_t mask = index.mask_of(side);
  require_proper(index, mask);
  return index.values(mask);
}

bool is_central(const PlanarInstance& inst, const std::vector<VertexId>& side) {
  CutIndex index(inst);
  std::uint32_t mask = index.mask_of(side);
  require_proper(index, mask);
  return index.central(mask);
}

std::optional<CutWitness> check_cut_condition(const PlanarInstance& inst,
                                              CutMode mode,
                                              std::size_t max_vertices) {
  if (inst.vertices.size() > max_vertices)
    throw CutBudgetExceeded("instance has " +
                            std::to_string(inst.vertices.size()) +
                            " vertices, budget is " +
                            std::to_string(max_vertices));
  CutIndex index(inst);
  const std::size_t n = index.vertex_count();
  if (n < 2) return std::nullopt;
  const std::uint32_t full = (1u << n) - 1;

  std::optional<std::uint32_t> best;
  std::int64_t best_deficit = 0;
  // X always contains vertex 0; its complement describes the same cut.
  for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
    const std::uint32_t mask = 1u | (rest << 1);
    if (mask == full) continue;
    CutValues v = index.values(mask);
    std::int64_t deficit = v.request_across - v.capacity_across;
    if (deficit <= 0) continue;
    if (best && deficit < best_deficit) continue;
    if (mode == CutMode::kCentralOnly && !index.central(mask)) continue;
    if (!best || deficit > best_deficit || lex_less(mask, *best)) {
      best = mask;
      best_deficit = deficit;
    }
  }
  if (!best) return std::nullopt;
  CutValues v = index.values(*best);
  return CutWitness{index.side_of(*best), v.capacity_across, v.request_across,
                    index.central(*best)};
}

}  // namespace planarflow
