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

#include "planarflow/generator.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <set>

namespace planarflow {

namespace {

// Draws uniformly-ish from [0, n). Avoids std distributions, whose output
// differs between standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::string label(char prefix, std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%c%02zu", prefix, i);
  return buf;
}

}  // namespace

void plant_capacities(PlanarInstance& inst, std::uint64_t seed,
                      std::int64_t slack) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::map<EndpointPair, std::size_t> edge_of;
  for (std::size_t i = inst.edges.size(); i-- > 0;)
    edge_of[inst.edges[i].endpoints()] = i;
  std::vector<std::int64_t> load(inst.edges.size(), 0);
  for (const Demand& d : inst.demands) {
    const Face* f = inst.find_face(d.face);
    if (f == nullptr) throw GeneratorError("demand " + d.id + " has no face");
    const auto& bd = f->boundary;
    const std::size_t len = bd.size();
    const auto ps = std::find(bd.begin(), bd.end(), d.s) - bd.begin();
    const auto pt = std::find(bd.begin(), bd.end(), d.t) - bd.begin();
    for (std::int64_t unit = 0; unit < d.request; ++unit) {
      const bool forward = draw(rng, 2) == 0;
      for (std::size_t p = static_cast<std::size_t>(ps);
           p != static_cast<std::size_t>(pt);) {
        std::size_t q = forward ? (p + 1) % len : (p + len - 1) % len;
        auto it = edge_of.find(EndpointPair(bd[p], bd[q]));
        if (it == edge_of.end())
          throw GeneratorError("face " + f->id + " boundary uses a non-edge");
        ++load[it->second];
        p = q;
      }
    }
  }
  for (std::size_t i = 0; i < inst.edges.size(); ++i)
    inst.edges[i].capacity = load[i] + slack;
}

PlanarInstance generate_instance(const GeneratorParams& params) {
  if (params.vertex_budget < 3)
    throw GeneratorError("vertex budget below 3 cannot hold a cycle");
  if (params.face_demand_budget < 1 || params.max_request < 1)
    throw GeneratorError("demand budget too small to place a demand");
  if (params.vertex_budget > 99 || params.slack < 0)
    throw GeneratorError("generator parameters outside desk scale");

  std::mt19937_64 rng(params.seed);
  const auto n = static_cast<std::size_t>(params.vertex_budget);
  PlanarInstance inst;
  for (std::size_t i = 0; i < n; ++i) inst.vertices.push_back(label('v', i));
  for (std::size_t i = 0; i < n; ++i)
    inst.edges.push_back({label('e', i), inst.vertices[i],
                          inst.vertices[(i + 1) % n], 0});

  std::vector<std::vector<VertexId>> polygons{inst.vertices};
  const std::uint64_t chords = draw(rng, n - 2);  // 0 .. n-3
  for (std::uint64_t c = 0; c < chords; ++c) {
    std::vector<std::size_t> splittable;
    for (std::size_t i = 0; i < polygons.size(); ++i)
      if (polygons[i].size() >= 4) splittable.push_back(i);
    if (splittable.empty()) break;
    auto& poly = polygons[splittable[draw(rng, splittable.size())]];
    const std::size_t len = poly.size();
    std::size_t a = 0, b = 0;
    do {
      a = draw(rng, len);
      b = draw(rng, len);
      if (a > b) std::swap(a, b);
    } while (b - a < 2 || (a == 0 && b == len - 1));
    std::vector<VertexId> inner(poly.begin() + static_cast<long>(a),
                                poly.begin() + static_cast<long>(b) + 1);
    std::vector<VertexId> rest(poly.begin() + static_cast<long>(b), poly.end());
    rest.insert(rest.end(), poly.begin(), poly.begin() + static_cast<long>(a) + 1);
    inst.edges.push_back({label('e', inst.edges.size()), poly[a], poly[b], 0});
    poly = std::move(rest);
    polygons.push_back(std::move(inner));
  }

  inst.faces.push_back({"f00", inst.vertices, true});
  for (auto& poly : polygons)
    inst.faces.push_back({label('f', inst.faces.size()), std::move(poly), false});

  for (const Face& f : inst.faces) {
    const std::size_t len = f.boundary.size();
    const std::size_t possible = len * (len - 1) / 2;
    std::size_t want = draw(rng, static_cast<std::uint64_t>(params.face_demand_budget) + 1);
    want = std::min(want, possible);
    std::set<EndpointPair> used;
    while (used.size() < want) {
      std::size_t a = draw(rng, len), b = draw(rng, len);
      if (a == b) continue;
      EndpointPair p(f.boundary[a], f.boundary[b]);
      if (!used.insert(p).second) continue;
      const auto request =
          static_cast<std::int64_t>(1 + draw(rng, static_cast<std::uint64_t>(params.max_request)));
      inst.demands.push_back({label('d', inst.demands.size()), f.boundary[a],
                              f.boundary[b], request, f.id});
    }
  }
  if (inst.demands.empty())
    inst.demands.push_back({label('d', 0), inst.vertices[0],
                            inst.vertices[n / 2], 1, "f00"});

  plant_capacities(inst, params.seed, params.slack);
  return inst;
}

}  // namespace planarflow
