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

#ifndef PLANARFLOW_ROUTER_HPP_
#define PLANARFLOW_ROUTER_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "planarflow/instance.hpp"

namespace planarflow {

// A walk in G as a vertex sequence. Walks are undirected; the stored
// direction is only a convention.
using Walk = std::vector<VertexId>;

// Per-demand walk multisets with the resulting edge loads.
//
// Parallel supply edges are interchangeable for a walk, so the load on a
// vertex pair is spread over its edges in identifier order, each edge
// taking at most alpha_pair * c(e) where alpha_pair is the pair's own
// congestion.
struct Routing {
  std::map<std::string, std::vector<Walk>> assignments;
  std::map<std::string, std::int64_t> loads;  // edge id -> traversals
  std::optional<std::int64_t> alpha;          // nullopt: a 0-capacity edge is loaded

  bool operator==(const Routing&) const = default;
};

// Builds a Routing from walks, computing loads and congestion.
Routing make_routing(const PlanarInstance& inst,
                     std::map<std::string, std::vector<Walk>> assignments);

// Removes cycles from a walk; endpoints are kept and load never grows.
Walk loop_erase(const Walk& walk);

// Every vertex has even total incident capacity plus request.
bool is_eulerian(const PlanarInstance& inst);

// No two demands homed on the same face cross.
bool is_planar_union(const PlanarInstance& inst);

struct RouterOptions {
  std::uint64_t budget = 10'000'000;  // node expansions
};

enum class RouteStatus { kRouted, kInfeasible, kBudgetExceeded };

struct RouteResult {
  RouteStatus status = RouteStatus::kInfeasible;
  std::optional<Routing> routing;
  std::uint64_t expansions = 0;
};

// Eulerian planar-union instance satisfying the cut condition was proved
// unroutable. This is always a defect in the search.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact backtracking search for an integer multiflow with load <= c.
// Units are taken demand by demand in identifier order; each unit tries the
// simple paths of its demand shortest-first, then by vertex sequence, and
// units of one demand use nondecreasing path ranks. Partial assignments are
// pruned when a central cut of the residual instance is violated.
RouteResult route_integer_multiflow(const PlanarInstance& inst,
                                    const RouterOptions& options = {});

struct RoutingViolation {
  std::string kind;  // "demand count", "zero-capacity edge loaded", ...
  std::string element;
  std::string message;
};

// Recomputes loads from the walks alone and checks endpoints, per-demand
// walk counts, adjacency and load <= alpha * c. Returns the first violation.
std::optional<RoutingViolation> verify_routing(const PlanarInstance& inst,
                                               const Routing& routing,
                                               std::int64_t alpha);

std::string format_alpha(const std::optional<std::int64_t>& alpha);

// Text form: `path <did> <v1> ... <vk>`, `load <eid> <n>`, `alpha <n|inf>`.
std::string format_routing(const Routing& routing);
// Accepts format_routing() output; `congestion` summary lines are skipped.
Routing parse_routing(std::string_view text);

}  // namespace planarflow

#endif  // PLANARFLOW_ROUTER_HPP_
