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
#include "planarflow/driver.hpp"
#include "support/fixtures.hpp"

namespace pf = planarflow;

TEST_CASE("bound and logarithm helpers") {
  CHECK(pf::ceil_log2(1) == 0);
  CHECK(pf::ceil_log2(2) == 1);
  CHECK(pf::ceil_log2(5) == 3);
  CHECK(pf::ceil_log2(8) == 3);
  CHECK(pf::congestion_bound(1) == 2);
  CHECK(pf::congestion_bound(2) == 4);
  CHECK(pf::congestion_bound(8) == 8);
  CHECK(pf::congestion_bound(9) == 10);
  CHECK_THROWS_AS(pf::congestion_bound(0), std::invalid_argument);
}

TEST_CASE("terminals per face") {
  CHECK(pf::max_terminals_per_face(fixtures::octagon()) == 8);
  CHECK(pf::max_terminals_per_face(fixtures::square()) == 4);
}

TEST_CASE("octagon instance routes within the bound") {
  auto inst = fixtures::octagon();
  auto result = pf::route_with_bound(inst);
  CHECK(result.k == 8);
  CHECK(result.bound == 8);
  CHECK(result.levels <= 4);
  REQUIRE(result.routing.alpha.has_value());
  CHECK(*result.routing.alpha <= 8);
  CHECK_FALSE(pf::verify_routing(inst, result.routing, 8).has_value());
}

TEST_CASE("square needs two units of congestion at most") {
  auto sq = fixtures::square();
  auto result = pf::route_with_bound(sq);
  CHECK(result.bound == 6);
  CHECK_FALSE(pf::verify_routing(sq, result.routing, result.bound).has_value());
  CHECK(*result.routing.alpha >= 2);  // integrally infeasible at 1
}

TEST_CASE("driver refuses instances violating the cut condition") {
  auto inst = pf::parse_instance(fixtures::kPath);
  inst.edges[0].capacity = 1;
  CHECK_THROWS_AS(pf::route_with_bound(inst), pf::CutConditionViolated);
  auto broken = fixtures::square();
  broken.faces.pop_back();
  CHECK_THROWS_AS(pf::route_with_bound(broken), pf::InstanceError);
}

TEST_CASE("tiny router budget surfaces as an error") {
  pf::DriverOptions opts;
  opts.router.budget = 1;
  CHECK_THROWS_AS(pf::route_with_bound(fixtures::octagon(), opts),
                  pf::RouterBudgetExceeded);
}

TEST_CASE("generated instances route within the bound") {
  for (const auto& inst : fixtures::bound_suite(30)) {
    auto result = pf::route_with_bound(inst);
    const auto k = std::max<std::int64_t>(static_cast<std::int64_t>(result.k), 1);
    CHECK(result.bound == pf::congestion_bound(k));
    CHECK(result.levels <= static_cast<std::size_t>(pf::ceil_log2(k) + 1));
    CHECK_FALSE(pf::verify_routing(inst, result.routing, result.bound).has_value());
  }
}

TEST_CASE("routing is a pure function of the instance") {
  auto a = pf::route_with_bound(fixtures::octagon());
  auto b = pf::route_with_bound(fixtures::octagon());
  CHECK(a.routing == b.routing);
}
