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

#ifndef PLANARFLOW_CUT_ORACLE_HPP_
#define PLANARFLOW_CUT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "planarflow/instance.hpp"

namespace planarflow {

struct CutValues {
  std::int64_t capacity_across = 0;
  std::int64_t request_across = 0;

  bool operator==(const CutValues&) const = default;
};

// A vertex set X whose cut delta(X) carries more request than capacity.
struct CutWitness {
  std::vector<VertexId> side;  // sorted
  std::int64_t capacity_across = 0;
  std::int64_t request_across = 0;
  bool central = false;

  std::int64_t deficit() const { return request_across - capacity_across; }
};

enum class CutMode { kAllCuts, kCentralOnly };

// Raised when exhaustive enumeration would exceed the vertex budget.
class CutBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCutVertexBudget = 24;

// Throws InstanceError if X is empty, equals V or names an unknown vertex.
CutValues cut_values(const PlanarInstance& inst,
                     const std::vector<VertexId>& side);

// True iff the supply subgraphs induced by X and by V \ X are both connected.
bool is_central(const PlanarInstance& inst, const std::vector<VertexId>& side);

// Exhaustive check of c(delta(X)) >= r(delta(X)). Returns the violating cut
// with the largest deficit (ties: lexicographically smallest X, where X is
// always the side holding the smallest vertex identifier), or nullopt if
// the condition holds.
std::optional<CutWitness> check_cut_condition(
    const PlanarInstance& inst, CutMode mode = CutMode::kAllCuts,
    std::size_t max_vertices = kDefaultCutVertexBudget);

// Bitmask view of an instance (at most 31 vertices) used by the exhaustive
// checks. Vertex i is the i-th identifier in sorted order.
class CutIndex {
 public:
  explicit CutIndex(const PlanarInstance& inst);

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t index(const VertexId& v) const;
  std::uint32_t mask_of(const std::vector<VertexId>& side) const;
  std::vector<VertexId> side_of(std::uint32_t mask) const;

  CutValues values(std::uint32_t mask) const;
  // Connectivity of the subgraph induced by `mask` over all supply edges.
  bool induces_connected(std::uint32_t mask) const;
  bool central(std::uint32_t mask) const;

 private:
  struct Link {
    std::uint32_t ends;
    std::int64_t weight;
  };
  std::vector<VertexId> vertices_;
  std::vector<Link> supply_;
  std::vector<Link> requests_;
  std::vector<std::uint32_t> adjacency_;
};

}  // namespace planarflow

#endif  // PLANARFLOW_CUT_ORACLE_HPP_
