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

// Shared instances and seeded instance families for the test binaries.

#ifndef PLANARFLOW_TESTS_FIXTURES_HPP_
#define PLANARFLOW_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "planarflow/cut_oracle.hpp"
#include "planarflow/driver.hpp"
#include "planarflow/generator.hpp"
#include "planarflow/instance.hpp"
#include "planarflow/router.hpp"
#include "planarflow/uncrossing.hpp"

#ifndef PLANARFLOW_TEST_DATA
#define PLANARFLOW_TEST_DATA "tests/data"
#endif

namespace fixtures {

namespace pf = planarflow;

inline std::string data_path(const std::string& name) {
  return std::string(PLANARFLOW_TEST_DATA) + "/" + name;
}

inline pf::PlanarInstance octagon() {
  return pf::read_instance_file(data_path("octagon.inst"));
}

// Unit 4-cycle with both diagonals as demands on the inner face.
inline const char* kSquare = R"(# square with crossing diagonals
vertex u1
vertex u2
vertex u3
vertex u4
edge e1 u1 u2 1
edge e2 u2 u3 1
edge e3 u3 u4 1
edge e4 u4 u1 1
face in u1 u2 u3 u4
face out u1 u2 u3 u4 outer
demand d1 u1 u3 1 in
demand d2 u2 u4 1 in
)";

inline pf::PlanarInstance square() { return pf::parse_instance(kSquare); }

// Single path s-x-t closed into a triangle by a zero-capacity edge.
inline const char* kPath = R"(vertex s
vertex t
vertex x
edge a s x 3
edge b x t 3
edge z s t 0
face in s x t
face out s x t outer
demand d s t 2 in
)";

// Feasible instances from the planted generator with |V| in [lo, hi].
inline std::vector<pf::PlanarInstance> planted(std::size_t count, int lo,
                                               int hi, int per_face,
                                               int max_request,
                                               std::uint64_t seed0) {
  std::vector<pf::PlanarInstance> out;
  for (std::uint64_t s = seed0; out.size() < count; ++s) {
    pf::GeneratorParams p;
    p.seed = s;
    p.vertex_budget = lo + static_cast<int>(s % static_cast<std::uint64_t>(hi - lo + 1));
    p.face_demand_budget = per_face;
    p.max_request = max_request;
    out.push_back(pf::generate_instance(p));
  }
  return out;
}

// Instances with at most eight terminals per face and |V| <= 14.
inline std::vector<pf::PlanarInstance> bound_suite(std::size_t count) {
  std::vector<pf::PlanarInstance> out;
  for (std::uint64_t s = 1; out.size() < count; ++s) {
    pf::GeneratorParams p;
    p.seed = 5000 + s;
    p.vertex_budget = 6 + static_cast<int>(s % 9);
    p.face_demand_budget = 3 + static_cast<int>(s % 4);
    p.max_request = 3;
    p.slack = static_cast<std::int64_t>(s % 2);
    auto inst = pf::generate_instance(p);
    if (pf::max_terminals_per_face(inst) > 8) continue;
    out.push_back(std::move(inst));
  }
  return out;
}

// Small instances with capacities knocked down at random so that a mix of
// routable and unroutable cases results. Bounded by 10 vertices, 14 edges
// and total request 8.
inline std::vector<pf::PlanarInstance> oracle_suite(std::size_t count) {
  std::vector<pf::PlanarInstance> out{square(), pf::doubled(square()),
                                      pf::parse_instance(kPath)};
  std::mt19937_64 rng(77);
  for (std::uint64_t s = 1; out.size() < count; ++s) {
    pf::GeneratorParams p;
    p.seed = 9000 + s;
    p.vertex_budget = 4 + static_cast<int>(s % 5);
    p.face_demand_budget = 3;
    p.max_request = 2;
    p.slack = 1;
    auto inst = pf::generate_instance(p);
    if (inst.total_request() > 8 || inst.edges.size() > 14) continue;
    for (auto& e : inst.edges)
      e.capacity = std::max<std::int64_t>(
          0, e.capacity - static_cast<std::int64_t>(rng() % 3));
    out.push_back(std::move(inst));
  }
  return out;
}

// Eulerian planar-union instances satisfying the cut condition.
inline std::vector<pf::PlanarInstance> eulerian_suite(std::size_t count) {
  std::vector<pf::PlanarInstance> out;
  std::mt19937_64 rng(4242);
  for (std::uint64_t s = 1; out.size() < count; ++s) {
    pf::GeneratorParams p;
    p.seed = 13000 + s;
    p.vertex_budget = 4 + static_cast<int>(s % 7);
    p.face_demand_budget = 3;
    p.max_request = 2;
    auto inst = pf::generate_instance(p);
    // Keep a noncrossing subset of the demands on every face.
    std::vector<pf::Demand> kept;
    for (const auto& d : inst.demands) {
      auto terms = pf::face_terminals(inst, d.face);
      bool clash = false;
      for (const auto& k : kept)
        if (k.face == d.face && pf::crossed(terms, k.endpoints(), d.endpoints()))
          clash = true;
      if (!clash) kept.push_back(d);
    }
    inst.demands = kept;
    // Random capacities, possibly below the planted ones.
    for (auto& e : inst.edges)
      e.capacity = static_cast<std::int64_t>(rng() % 3);
    inst = pf::doubled(inst);
    if (!pf::is_planar_union(inst) || !pf::is_eulerian(inst)) continue;
    if (pf::check_cut_condition(inst)) continue;
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace fixtures

#endif  // PLANARFLOW_TESTS_FIXTURES_HPP_
