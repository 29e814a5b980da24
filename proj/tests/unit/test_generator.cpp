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


#include "doctest.h"
#include "planarflow/cut_oracle.hpp"
#include "planarflow/generator.hpp"
#include "planarflow/router.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace pf = planarflow;

TEST_CASE("generated instances are valid and cut-feasible") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    pf::GeneratorParams p;
    p.seed = seed;
    p.vertex_budget = 3 + static_cast<int>(seed % 10);
    p.face_demand_budget = 1 + static_cast<int>(seed % 4);
    p.max_request = 3;
    auto inst = pf::generate_instance(p);
    CHECK(inst.vertices.size() == static_cast<std::size_t>(p.vertex_budget));
    CHECK(pf::validate(inst).ok());
    CHECK_FALSE(pf::check_cut_condition(inst).has_value());
    CHECK_FALSE(inst.demands.empty());
    for (const auto& f : inst.faces) {
      int on_face = 0;
      for (const auto& d : inst.demands) on_face += d.face == f.id;
      CHECK(on_face <= std::max(1, p.face_demand_budget));
    }
  }
}

TEST_CASE("planted capacities admit a routing") {
  for (const auto& inst : fixtures::planted(40, 4, 7, 2, 2, 50)) {
    if (inst.total_request() > 8) continue;
    CHECK(oracle::routable(inst));
  }
}

TEST_CASE("generation is deterministic per seed") {
  pf::GeneratorParams p;
  p.seed = 99;
  p.vertex_budget = 9;
  CHECK(pf::serialize(pf::generate_instance(p)) ==
        pf::serialize(pf::generate_instance(p)));
  auto q = p;
  q.seed = 100;
  CHECK(pf::serialize(pf::generate_instance(p)) !=
        pf::serialize(pf::generate_instance(q)));
}

TEST_CASE("slack raises every capacity") {
  pf::GeneratorParams p;
  p.seed = 5;
  auto a = pf::generate_instance(p);
  p.slack = 2;
  auto b = pf::generate_instance(p);
  REQUIRE(a.edges.size() == b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i)
    CHECK(b.edges[i].capacity == a.edges[i].capacity + 2);
}

TEST_CASE("bad parameters are rejected") {
  pf::GeneratorParams p;
  p.vertex_budget = 2;
  CHECK_THROWS_AS(pf::generate_instance(p), pf::GeneratorError);
  p.vertex_budget = 5;
  p.face_demand_budget = 0;
  CHECK_THROWS_AS(pf::generate_instance(p), pf::GeneratorError);
}
