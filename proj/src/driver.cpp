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

#include "planarflow/driver.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "planarflow/uncrossing.hpp"

namespace planarflow {

std::int64_t ceil_log2(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("ceil_log2 needs k >= 1");
  std::int64_t bits = 0;
  while ((std::int64_t{1} << bits) < k) ++bits;
  return bits;
}

std::int64_t congestion_bound(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("congestion_bound needs k >= 1");
  return 2 * ceil_log2(k) + 2;
}

std::size_t max_terminals_per_face(const PlanarInstance& inst) {
  std::size_t k = 0;
  for (const Face& f : inst.faces)
    k = std::max(k, face_terminals(inst, f.id).m);
  return k;
}

CutConditionViolated::CutConditionViolated(CutWitness witness)
    : std::runtime_error("cut condition violated: request " +
                         std::to_string(witness.request_across) +
                         " > capacity " +
                         std::to_string(witness.capacity_across)),
      witness_(std::move(witness)) {}

namespace {

Walk oriented(const Walk& w, const VertexId& from, const VertexId& to) {
  if (!w.empty() && w.front() == from && w.back() == to) return w;
  if (!w.empty() && w.back() == from && w.front() == to)
    return Walk(w.rbegin(), w.rend());
  throw DriverDefect("walk does not join " + from + " and " + to);
}

Walk join(Walk head, const Walk& tail) {
  if (head.back() != tail.front())
    throw DriverDefect("walks do not meet at " + head.back());
  head.insert(head.end(), tail.begin() + 1, tail.end());
  return head;
}

// Walks grouped by endpoint pair, handed out in insertion order.
class WalkPool {
 public:
  void add(const Walk& w) { pool_[EndpointPair(w.front(), w.back())].push_back(w); }

  Walk take(const EndpointPair& p) {
    auto it = pool_.find(p);
    if (it == pool_.end() || it->second.empty())
      throw DriverDefect("no walk left for " + p.str());
    Walk w = std::move(it->second.front());
    it->second.pop_front();
    return w;
  }

  std::size_t remaining() const {
    std::size_t n = 0;
    for (const auto& [p, walks] : pool_) n += walks.size();
    return n;
  }

 private:
  std::map<EndpointPair, std::deque<Walk>> pool_;
};

struct LevelOutcome {
  std::map<std::string, std::vector<Walk>> walks;
  std::size_t levels = 0;
};

class Recursion {
 public:
  Recursion(const DriverOptions& options, std::size_t max_levels)
      : options_(options), max_levels_(max_levels) {}

  std::vector<std::map<std::string, std::int64_t>> per_level;

  LevelOutcome solve(const PlanarInstance& inst, std::size_t depth) {
    if (depth >= max_levels_)
      throw DriverDefect("recursion exceeded " + std::to_string(max_levels_) +
                         " levels");
    if (is_planar_union(inst)) return base(inst);

    LevelPlan plan = plan_level(inst);
    Routing white = route(plan.white_instance, "white phase");
    per_level.push_back(white.loads);
    WalkPool white_pool;
    for (const auto& [id, walks] : white.assignments)
      for (const Walk& w : walks) white_pool.add(w);

    LevelOutcome red = solve(plan.residual_instance, depth + 1);
    WalkPool red_pool;
    for (const auto& [id, walks] : red.walks)
      for (const Walk& w : walks) red_pool.add(w);

    std::map<std::pair<std::string, EndpointPair>, std::deque<Walk>> composed;
    for (const FaceUncrossPlan& fp : plan.faces) {
      for (const SelectedPair& sp : fp.pairs) {
        auto& low = composed[{fp.face, sp.low_edge()}];
        auto& high = composed[{fp.face, sp.high_edge()}];
        for (std::int64_t unit = 0; unit < sp.multiplicity; ++unit) {
          Walk w1 = oriented(white_pool.take(sp.white()), sp.low_left, sp.high_right);
          Walk w2 = oriented(white_pool.take(sp.white()), sp.low_left, sp.high_right);
          Walk r1 = oriented(red_pool.take(sp.red_second_half()), sp.high_right,
                             sp.low_right);
          Walk r2 = oriented(red_pool.take(sp.red_first_half()), sp.high_left,
                             sp.low_left);
          low.push_back(loop_erase(join(std::move(w1), r1)));
          high.push_back(loop_erase(join(std::move(r2), w2)));
        }
      }
      for (const WhiteEdge& w : fp.white) {
        if (w.origin != WhiteOrigin::kSolo) continue;
        auto& out = composed[{fp.face, w.endpoints}];
        for (std::int64_t unit = 0; unit < w.weight; ++unit)
          out.push_back(white_pool.take(w.endpoints));
      }
    }

    LevelOutcome outcome;
    outcome.levels = red.levels + 1;
    for (const Demand& d : sorted(inst)) {
      auto& out = outcome.walks[d.id];
      const FaceUncrossPlan* fp = plan.find(d.face);
      if (fp != nullptr && fp->terminals.is_bilateral(d.endpoints())) {
        auto& source = composed[{d.face, d.endpoints()}];
        for (std::int64_t unit = 0; unit < d.request; ++unit) {
          if (source.empty())
            throw DriverDefect("composition ran short for demand " + d.id);
          out.push_back(std::move(source.front()));
          source.pop_front();
        }
      } else {
        for (std::int64_t unit = 0; unit < d.request; ++unit)
          out.push_back(red_pool.take(d.endpoints()));
      }
    }
    if (red_pool.remaining() != 0)
      throw DriverDefect("residual walks left unused after composition");
    return outcome;
  }

 private:
  static std::vector<Demand> sorted(const PlanarInstance& inst) {
    std::vector<Demand> out = inst.demands;
    std::sort(out.begin(), out.end(),
              [](const Demand& a, const Demand& b) { return a.id < b.id; });
    return out;
  }

  // No crossing demands left: route the doubled instance and keep one walk
  // per original unit.
  LevelOutcome base(const PlanarInstance& inst) {
    Routing r = route(doubled(inst), "base level");
    per_level.push_back(r.loads);
    LevelOutcome outcome;
    outcome.levels = 1;
    for (const Demand& d : inst.demands) {
      const auto& walks = r.assignments.at(d.id);
      outcome.walks[d.id].assign(walks.begin(), walks.begin() + d.request);
    }
    return outcome;
  }

  Routing route(const PlanarInstance& inst, const std::string& phase) {
    RouteResult rr = route_integer_multiflow(inst, options_.router);
    if (rr.status == RouteStatus::kBudgetExceeded)
      throw RouterBudgetExceeded(phase + ": router budget of " +
                                 std::to_string(options_.router.budget) +
                                 " expansions exceeded");
    if (rr.status != RouteStatus::kRouted)
      throw DriverDefect(phase + ": instance is not routable");
    return std::move(*rr.routing);
  }

  const DriverOptions& options_;
  std::size_t max_levels_;
};

}  // namespace

DriverResult route_with_bound(const PlanarInstance& inst,
                              const DriverOptions& options) {
  ValidationReport report = validate(inst);
  if (!report.ok())
    throw InstanceError("invalid instance: " + report.violations[0].kind +
                        " (" + report.violations[0].element + ")");
  if (auto witness = check_cut_condition(inst))
    throw CutConditionViolated(std::move(*witness));

  DriverResult result;
  result.k = max_terminals_per_face(inst);
  const std::int64_t k = std::max<std::int64_t>(
      static_cast<std::int64_t>(result.k), 1);
  result.bound = congestion_bound(k);
  const auto max_levels = static_cast<std::size_t>(ceil_log2(k) + 1);

  Recursion recursion(options, max_levels);
  LevelOutcome outcome = recursion.solve(inst, 0);
  result.levels = outcome.levels;
  result.per_level = std::move(recursion.per_level);
  result.routing = make_routing(inst, std::move(outcome.walks));
  if (auto violation = verify_routing(inst, result.routing, result.bound))
    throw DriverDefect("composed routing fails verification: " +
                       violation->kind + " at " + violation->element + " (" +
                       violation->message + ")");
  return result;
}

}  // namespace planarflow
