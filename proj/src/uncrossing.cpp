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

#include "planarflow/uncrossing.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <tuple>
#include <utility>

namespace planarflow {

bool crossed(const FaceTerminals& terms, const EndpointPair& a,
             const EndpointPair& b) {
  std::size_t a1 = terms.position(a.first), a2 = terms.position(a.second);
  std::size_t b1 = terms.position(b.first), b2 = terms.position(b.second);
  if (a1 > a2) std::swap(a1, a2);
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  auto inside = [&](std::size_t p) { return a1 < p && p < a2; };
  return inside(b1) != inside(b2);
}

namespace {

std::int64_t pooled_request(const PlanarInstance& inst, std::string_view face,
                            const EndpointPair& p) {
  std::int64_t total = 0;
  for (const Demand& d : inst.demands)
    if (d.face == face && d.endpoints() == p) total += d.request;
  return total;
}

void take_request(PlanarInstance& inst, std::string_view face,
                  const EndpointPair& p, std::int64_t amount) {
  for (Demand& d : inst.demands) {
    if (amount == 0) break;
    if (d.face != face || d.endpoints() != p) continue;
    std::int64_t cut = std::min(amount, d.request);
    d.request -= cut;
    amount -= cut;
  }
  std::erase_if(inst.demands, [](const Demand& d) { return d.request == 0; });
}

void add_request(PlanarInstance& inst, std::string_view face,
                 const VertexId& a, const VertexId& b, std::int64_t amount) {
  EndpointPair p(a, b);
  for (Demand& d : inst.demands) {
    if (d.face == face && d.endpoints() == p) {
      d.request += amount;
      return;
    }
  }
  std::vector<std::string> ids;
  for (const Demand& d : inst.demands) ids.push_back(d.id);
  inst.demands.push_back({fresh_id("x." + p.first + "-" + p.second, ids),
                          p.first, p.second, amount, std::string(face)});
}

bool homes_pair(const PlanarInstance& inst, std::string_view face,
                const EndpointPair& p) {
  return std::any_of(inst.demands.begin(), inst.demands.end(),
                     [&](const Demand& d) {
                       return d.face == face && d.endpoints() == p;
                     });
}

}  // namespace

PlanarInstance uncross(const PlanarInstance& inst, const OrientedDemand& d1,
                       const OrientedDemand& d2, std::string_view face) {
  const EndpointPair p1(d1.source, d1.target), p2(d2.source, d2.target);
  std::string home(face);
  if (home.empty()) {
    for (const Face& f : inst.faces) {
      if (!homes_pair(inst, f.id, p1) || !homes_pair(inst, f.id, p2)) continue;
      if (!crossed(face_terminals(inst, f.id), p1, p2)) continue;
      home = f.id;
      break;
    }
    if (home.empty())
      throw InstanceError("demands " + p1.str() + " and " + p2.str() +
                          " are not crossed on a common face");
  }
  if (!homes_pair(inst, home, p1) || !homes_pair(inst, home, p2))
    throw InstanceError("demands " + p1.str() + " and " + p2.str() +
                        " are not both homed on face " + home);
  // Crossed pairs interleave, so s1, s2, t1, t2 is a cyclic order in one of
  // the two directions for either labeling of the second demand.
  if (!crossed(face_terminals(inst, home), p1, p2))
    throw InstanceError("demands " + p1.str() + " and " + p2.str() +
                        " are not crossed on face " + home);

  const std::int64_t m = std::min(pooled_request(inst, home, p1),
                                  pooled_request(inst, home, p2));
  PlanarInstance out = inst;
  take_request(out, home, p1, m);
  take_request(out, home, p2, m);
  add_request(out, home, d1.source, d2.source, m);
  add_request(out, home, d1.target, d2.target, m);
  return out;
}

FaceUncrossPlan select_pairs(const PlanarInstance& inst,
                             std::string_view face) {
  FaceUncrossPlan plan;
  plan.terminals = face_terminals(inst, face);  // throws on unknown face
  plan.face = plan.terminals.face;
  const FaceTerminals& t = plan.terminals;
  if (t.m == 0) throw InstanceError("face " + plan.face + " has no terminals");
  plan.chord = EndpointPair(t.terminals[t.k == 0 ? 0 : t.k - 1],
                            t.terminals[t.m - 1]);

  // (first-half position, second-half position) -> remaining request
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> work;
  for (const Demand& d : inst.demands) {
    if (d.face != plan.face) continue;
    std::size_t a = t.position(d.s), b = t.position(d.t);
    if (a > b) std::swap(a, b);
    if (t.in_first_half(a) && !t.in_first_half(b)) {
      work[{a, b}] += d.request;
      plan.bilateral[d.endpoints()] += d.request;
    }
  }

  std::map<std::pair<EndpointPair, WhiteOrigin>, std::int64_t> white;
  while (!work.empty()) {
    SelectionStep step;
    step.low_left = work.begin()->first.first;
    for (const auto& [key, r] : work)
      if (key.first == step.low_left) step.low_right = key.second;
    step.high_right = 0;
    for (const auto& [key, r] : work)
      step.high_right = std::max(step.high_right, key.second);
    for (const auto& [key, r] : work) {
      if (key.second == step.high_right) {
        step.high_left = key.first;
        break;
      }
    }
    const auto low = std::make_pair(step.low_left, step.low_right);
    const auto high = std::make_pair(step.high_left, step.high_right);
    if (step.solo()) {
      step.amount = work[low];
      white[{EndpointPair(t.terminals[low.first], t.terminals[low.second]),
             WhiteOrigin::kSolo}] += step.amount;
      work.erase(low);
    } else {
      step.amount = std::min(work[low], work[high]);
      SelectedPair pair{t.terminals[step.low_left], t.terminals[step.low_right],
                        t.terminals[step.high_left],
                        t.terminals[step.high_right], step.amount};
      white[{pair.white(), WhiteOrigin::kPaired}] += step.amount;
      plan.red[pair.red_first_half()] += step.amount;
      plan.red[pair.red_second_half()] += step.amount;
      plan.pairs.push_back(pair);
      if ((work[low] -= step.amount) == 0) work.erase(low);
      if ((work[high] -= step.amount) == 0) work.erase(high);
    }
    plan.steps.push_back(step);
  }
  for (const auto& [key, weight] : white)
    plan.white.push_back({key.first, weight, key.second});
  return plan;
}

const FaceUncrossPlan* LevelPlan::find(std::string_view face) const {
  for (const FaceUncrossPlan& p : faces)
    if (p.face == face) return &p;
  return nullptr;
}

std::size_t distinct_demand_pairs(const PlanarInstance& inst,
                                  std::string_view face) {
  std::set<EndpointPair> pairs;
  for (const Demand& d : inst.demands)
    if (d.face == face) pairs.insert(d.endpoints());
  return pairs.size();
}

namespace {

std::string numbered(char prefix, std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%c%03zu", prefix, n);
  return buf;
}

// Merges demands by (home face, endpoint pair) and renumbers them.
std::vector<Demand> merge_demands(const std::vector<Demand>& demands,
                                  char prefix) {
  std::map<std::pair<std::string, EndpointPair>, std::int64_t> merged;
  for (const Demand& d : demands) merged[{d.face, d.endpoints()}] += d.request;
  std::vector<Demand> out;
  for (const auto& [key, request] : merged)
    out.push_back({numbered(prefix, out.size()), key.second.first,
                   key.second.second, request, key.first});
  return out;
}

}  // namespace

LevelPlan plan_level(const PlanarInstance& inst) {
  LevelPlan level;
  for (const Face& f : inst.faces)
    if (distinct_demand_pairs(inst, f.id) >= 2)
      level.faces.push_back(select_pairs(inst, f.id));

  PlanarInstance white = inst;
  white.demands.clear();
  for (const FaceUncrossPlan& plan : level.faces)
    for (const WhiteEdge& w : plan.white)
      white.demands.push_back({"", w.endpoints.first, w.endpoints.second,
                               w.weight, plan.face});
  white.demands = merge_demands(white.demands, 'w');
  level.white_instance = doubled(white);

  PlanarInstance residual = inst;
  residual.demands.clear();
  for (const Demand& d : inst.demands) {
    const FaceUncrossPlan* plan = level.find(d.face);
    if (plan && plan->terminals.is_bilateral(d.endpoints())) continue;
    residual.demands.push_back(d);
  }
  for (const FaceUncrossPlan& plan : level.faces)
    for (const auto& [pair, request] : plan.red)
      residual.demands.push_back(
          {"", pair.first, pair.second, request, plan.face});
  for (std::size_t i = 0; i < residual.demands.size(); ++i)
    residual.demands[i].id = numbered('t', i);
  for (const FaceUncrossPlan& plan : level.faces)
    residual = insert_zero_chord(residual, plan.face, plan.chord.first,
                                 plan.chord.second);
  residual.demands = merge_demands(residual.demands, 'r');
  level.residual_instance = std::move(residual);
  return level;
}

}  // namespace planarflow
