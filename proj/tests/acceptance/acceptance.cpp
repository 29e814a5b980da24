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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "planarflow/bounds.hpp"
#include "planarflow/cut_oracle.hpp"
#include "planarflow/driver.hpp"
#include "planarflow/router.hpp"
#include "planarflow/uncrossing.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace pf = planarflow;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    detail = pass ? why : detail + "; " + why;
    pass = false;
  }
};

int failures = 0;

// limit_s <= 0: no time limit.
void run(int number, const char* title, double limit_s,
         const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "took %.2fs, limit %.0fs", secs, limit_s);
    o.fail(buf);
  }
  if (!o.pass) ++failures;
  std::printf("criterion %d %s  %s  [%.2fs]  %s\n", number,
              o.pass ? "PASS" : "FAIL", title, secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Reproduces the uncross-demo trace for one face.
std::string trace(const pf::FaceUncrossPlan& plan) {
  std::ostringstream out;
  const auto& t = plan.terminals;
  out << "face " << plan.face << " terminals";
  for (const auto& v : t.terminals) out << ' ' << v;
  out << " m " << t.m << " k " << t.k << '\n';
  std::size_t pair = 0;
  for (std::size_t s = 0; s < plan.steps.size(); ++s) {
    const auto& st = plan.steps[s];
    out << "step " << s + 1 << " i " << st.low_left + 1 << " j "
        << st.low_right + 1 << " i' " << st.high_left + 1 << " j' "
        << st.high_right + 1 << " m " << st.amount;
    if (st.solo()) {
      pf::EndpointPair e(t.terminals[st.low_left], t.terminals[st.low_right]);
      out << " solo " << e.str() << " white " << e.str() << '\n';
      continue;
    }
    const auto& sp = plan.pairs[pair++];
    out << " pair " << sp.low_edge().str() << ' ' << sp.high_edge().str()
        << " white " << sp.white().str() << " red " << sp.red_first_half().str()
        << ' ' << sp.red_second_half().str() << '\n';
  }
  for (const auto& w : plan.white)
    out << "white " << w.endpoints.str() << ' ' << w.weight << ' '
        << (w.origin == pf::WhiteOrigin::kSolo ? "solo" : "paired") << '\n';
  for (const auto& [p, r] : plan.red) out << "red " << p.str() << ' ' << r << '\n';
  out << "chord " << plan.chord.first << ' ' << plan.chord.second << '\n';
  return out.str();
}

Outcome golden_trace() {
  Outcome o;
  auto inst = fixtures::octagon();
  auto plan = pf::select_pairs(inst, "F");
  if (trace(plan) != slurp(fixtures::data_path("octagon.trace")))
    o.fail("trace differs from golden file");

  using Pair = std::tuple<std::string, std::string, std::int64_t>;
  std::vector<Pair> want{{"u1-u7", "u4-u8", 3}, {"u2-u7", "u4-u8", 1},
                         {"u3-u5", "u4-u8", 2}};
  std::vector<Pair> got;
  for (const auto& p : plan.pairs)
    got.emplace_back(p.low_edge().str(), p.high_edge().str(), p.multiplicity);
  if (got != want) o.fail("selected pairs differ");
  if (plan.steps.size() != 4 || !plan.steps[3].solo() ||
      plan.steps[3].amount != 5 ||
      plan.terminals.terminals[plan.steps[3].low_left] != "u4" ||
      plan.terminals.terminals[plan.steps[3].low_right] != "u6")
    o.fail("fourth iteration is not solo (u4u6,5)");

  std::map<std::string, std::int64_t> white, red;
  for (const auto& w : plan.white) white[w.endpoints.str()] += w.weight;
  for (const auto& [p, r] : plan.red) red[p.str()] = r;
  if (white != std::map<std::string, std::int64_t>{
                   {"u1-u8", 3}, {"u2-u8", 1}, {"u3-u8", 2}, {"u4-u6", 5}})
    o.fail("white set differs");
  if (red != std::map<std::string, std::int64_t>{{"u1-u4", 3}, {"u2-u4", 1},
                                                 {"u3-u4", 2}, {"u7-u8", 4},
                                                 {"u5-u8", 2}})
    o.fail("red set differs");

  auto level = pf::plan_level(inst);
  std::int64_t merged = 0;
  for (const auto& d : level.residual_instance.demands)
    if (d.endpoints() == pf::EndpointPair("u3", "u4")) merged += d.request;
  if (merged != 5) o.fail("merged u3u4 request is " + std::to_string(merged));
  if (o.pass) o.detail = "4 iterations, white and red sets exact, u3u4 merged to 5";
  return o;
}

Outcome uncross_suite() {
  Outcome o;
  std::size_t instances = 0, checks = 0, bad = 0;
  for (const auto& inst : fixtures::planted(300, 4, 8, 4, 3, 40000)) {
    ++instances;
    if (pf::check_cut_condition(inst)) {
      o.fail("generated instance violates the cut condition");
      continue;
    }
    for (const auto& f : inst.faces) {
      auto t = pf::face_terminals(inst, f.id);
      for (std::size_t a = 0; a < inst.demands.size(); ++a) {
        for (std::size_t b = a + 1; b < inst.demands.size(); ++b) {
          const auto& d1 = inst.demands[a];
          const auto& d2 = inst.demands[b];
          if (d1.face != f.id || d2.face != f.id) continue;
          if (!pf::crossed(t, d1.endpoints(), d2.endpoints())) continue;
          for (bool flip : {false, true}) {
            pf::OrientedDemand o2 = flip ? pf::OrientedDemand{d2.t, d2.s}
                                         : pf::OrientedDemand{d2.s, d2.t};
            auto out = pf::uncross(inst, {d1.s, d1.t}, o2, f.id);
            ++checks;
            if (pf::check_cut_condition(out)) ++bad;
          }
        }
      }
    }
  }
  if (bad > 0) o.fail(std::to_string(bad) + " uncrossed instances violate the cut condition");
  if (checks == 0) o.fail("no crossed pairs exercised");
  if (o.pass)
    o.detail = std::to_string(instances) + " instances, " +
               std::to_string(checks) + " uncrossings, 0 failures";
  return o;
}

Outcome bound_suite() {
  Outcome o;
  std::size_t n = 0, bad = 0;
  std::int64_t worst_ratio_num = 0, worst_ratio_den = 1;
  std::map<std::size_t, int> by_levels;
  for (const auto& inst : fixtures::bound_suite(100)) {
    ++n;
    std::string what;
    try {
      auto r = pf::route_with_bound(inst);
      const auto k = std::max<std::int64_t>(static_cast<std::int64_t>(r.k), 1);
      if (r.k > 8 || inst.vertices.size() > 14) what = "instance outside the suite limits";
      if (r.bound != 2 * pf::ceil_log2(k) + 2) what = "wrong bound";
      if (auto v = pf::verify_routing(inst, r.routing, r.bound))
        what = "verify: " + v->kind + " " + v->element;
      if (r.levels > static_cast<std::size_t>(pf::ceil_log2(k) + 1))
        what = "levels " + std::to_string(r.levels);
      for (const auto& loads : r.per_level)
        for (const auto& [edge, load] : loads)
          if (edge.rfind("chord.", 0) == 0 && load != 0) what = "chord " + edge + " loaded";
      ++by_levels[r.levels];
      if (r.routing.alpha && *r.routing.alpha * worst_ratio_den > worst_ratio_num * r.bound) {
        worst_ratio_num = *r.routing.alpha;
        worst_ratio_den = r.bound;
      }
    } catch (const std::exception& e) {
      what = e.what();
    }
    if (!what.empty()) {
      if (bad++ == 0) o.fail("first failure: " + what);
    }
  }
  if (bad > 0) o.fail(std::to_string(bad) + " of " + std::to_string(n) + " failed");
  if (o.pass) {
    o.detail = std::to_string(n) + " instances verified; worst alpha/bound " +
               std::to_string(worst_ratio_num) + "/" + std::to_string(worst_ratio_den) +
               "; levels";
    for (const auto& [l, count] : by_levels)
      o.detail += " " + std::to_string(l) + ":" + std::to_string(count);
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t n = 0, feasible = 0, mismatches = 0;
  for (const auto& inst : fixtures::oracle_suite(60)) {
    if (inst.vertices.size() > 10 || inst.edges.size() > 14 || inst.total_request() > 8) {
      o.fail("suite instance outside the limits");
      continue;
    }
    ++n;
    auto r = pf::route_integer_multiflow(inst);
    if (r.status == pf::RouteStatus::kBudgetExceeded) {
      o.fail("budget exceeded");
      continue;
    }
    const bool routed = r.status == pf::RouteStatus::kRouted;
    feasible += routed;
    if (routed != oracle::routable(inst)) ++mismatches;
    if (routed && pf::verify_routing(inst, *r.routing, 1)) o.fail("returned routing fails verification");
  }
  if (mismatches) o.fail(std::to_string(mismatches) + " verdict mismatches");
  auto sq = fixtures::square();
  if (pf::route_integer_multiflow(sq).status != pf::RouteStatus::kInfeasible)
    o.fail("square with diagonals not reported infeasible");
  auto dbl = pf::route_integer_multiflow(pf::doubled(sq));
  if (dbl.status != pf::RouteStatus::kRouted || dbl.routing->alpha != 1)
    o.fail("doubled square does not route at alpha 1");
  if (o.pass)
    o.detail = std::to_string(n) + " cases (" + std::to_string(feasible) +
               " routable) agree with enumeration; square infeasible, doubled alpha 1";
  return o;
}

Outcome seymour_contract() {
  Outcome o;
  std::size_t n = 0, infeasible = 0, budget = 0;
  for (const auto& inst : fixtures::eulerian_suite(200)) {
    ++n;
    try {
      auto r = pf::route_integer_multiflow(inst);
      if (r.status == pf::RouteStatus::kInfeasible) ++infeasible;
      if (r.status == pf::RouteStatus::kBudgetExceeded) ++budget;
    } catch (const pf::ContractViolation&) {
      ++infeasible;
    }
  }
  if (infeasible) o.fail(std::to_string(infeasible) + " reported infeasible");
  if (budget) o.fail(std::to_string(budget) + " budget failures");
  if (o.pass) o.detail = std::to_string(n) + " instances routed; 0 infeasible, 0 budget";
  return o;
}

Outcome lower_bound() {
  Outcome o;
  for (int n = 0; n <= 9; ++n)
    if (pf::catalan(n) != oracle::noncrossing_partitions(n)) o.fail("catalan(" + std::to_string(n) + ")");
  for (int n = 1; n <= 6; ++n)
    if (pf::demand_graph_count(n) != oracle::perfect_matchings(2 * n))
      o.fail("demand_graph_count(" + std::to_string(n) + ")");
  for (int c = 1; c <= 5; ++c)
    if (pf::matching_glue_bound(c) != 2 * c * oracle::perfect_matchings(2 * c))
      o.fail("matching_glue_bound(" + std::to_string(c) + ")");

  std::size_t disagreements = 0;
  for (std::uint64_t n = 1; n <= 64; ++n) {
    const pf::BigInt total = pf::demand_graph_count(n);
    for (std::uint64_t c = 1; c <= 16; ++c) {
      const pf::BigInt solvable =
          pow(pf::matching_glue_bound(c), static_cast<unsigned>(2 * n)) *
          pow(pf::catalan(n), static_cast<unsigned>(c));
      const double l = pf::solvable_capacity_log(n, c);
      const double exact = pf::log_big(solvable);
      if (std::abs(l - exact) > 1e-6 * std::max(1.0, exact)) ++disagreements;
      if ((l >= pf::demand_graph_count_log(n)) != (solvable >= total)) ++disagreements;
    }
  }
  if (disagreements) o.fail(std::to_string(disagreements) + " log/exact disagreements");

  for (std::uint64_t n = 16; n <= 4096; n *= 2) {
    const double ln = std::log(static_cast<double>(n));
    const auto threshold = static_cast<std::int64_t>(std::floor(ln / (4 * std::log(ln)))) - 2;
    if (static_cast<std::int64_t>(pf::min_invocations(n)) < threshold)
      o.fail("min_invocations(" + std::to_string(n) + ") below threshold");
  }

  for (const char* text : {"10000", "1000000"}) {
    const pf::BigInt n(text);
    try {
      auto r = pf::verify_chain(n);
      if (!r.chain_holds()) o.fail("chain fails at n=" + std::string(text));
      if (r.solvable_covers_total) o.fail("verdict covered at n=" + std::string(text));
    } catch (const std::domain_error& e) {
      o.fail("verify_chain(" + std::string(text) + "): " + e.what());
    }
  }
  if (o.pass) o.detail = "oracles, log/exact agreement, thresholds and chain all hold";
  return o;
}

}  // namespace

int main() {
  run(1, "golden octagon trace", 1, golden_trace);
  run(2, "uncrossing keeps the cut condition", 60, uncross_suite);
  run(3, "congestion bound on generated instances", 300, bound_suite);
  run(4, "router verdicts match exhaustive enumeration", 0, oracle_equivalence);
  run(5, "Eulerian planar unions always route", 0, seymour_contract);
  run(6, "lower-bound numerics", 30, lower_bound);
  std::printf("%d of 6 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
