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

#ifndef PLANARFLOW_UNCROSSING_HPP_
#define PLANARFLOW_UNCROSSING_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planarflow/instance.hpp"

namespace planarflow {

// True iff the endpoints of `a` and `b` strictly interleave in the cyclic
// terminal order. Pairs sharing an endpoint never cross. Throws
// InstanceError if an endpoint is not a terminal of the face.
bool crossed(const FaceTerminals& terms, const EndpointPair& a,
             const EndpointPair& b);

// A demand with an orientation, as passed to uncross().
struct OrientedDemand {
  VertexId source;
  VertexId target;
};

// Moves m = min(r(s1t1), r(s2t2)) units from the crossed demands s1t1 and
// s2t2 onto s1s2 and t1t2. Swapping s2 and t2 selects the other
// re-pairing. Requests of parallel demand lines on the face are pooled; new
// demands are homed on the same face. When `face` is empty the unique face
// homing both demands is used.
PlanarInstance uncross(const PlanarInstance& inst, const OrientedDemand& d1,
                       const OrientedDemand& d2, std::string_view face = {});

// One iteration of the selection procedure. Positions index
// FaceTerminals::terminals. `low_*` is the bilateral edge leaving the
// first-half terminal of smallest position (with the farthest second-half
// end); `high_*` is the edge reaching the second-half terminal of largest
// position (with the nearest first-half end). Equal edges mean a solo step.
struct SelectionStep {
  std::size_t low_left = 0;
  std::size_t low_right = 0;
  std::size_t high_left = 0;
  std::size_t high_right = 0;
  std::int64_t amount = 0;

  bool solo() const {
    return low_left == high_left && low_right == high_right;
  }
};

// A crossed pair chosen by the selection procedure, with its multiplicity.
// Positions satisfy low_left < high_left < k <= low_right < high_right.
struct SelectedPair {
  VertexId low_left, low_right, high_left, high_right;
  std::int64_t multiplicity = 0;

  EndpointPair low_edge() const { return {low_left, low_right}; }
  EndpointPair high_edge() const { return {high_left, high_right}; }
  EndpointPair white() const { return {low_left, high_right}; }
  EndpointPair red_first_half() const { return {low_left, high_left}; }
  EndpointPair red_second_half() const { return {low_right, high_right}; }
};

enum class WhiteOrigin { kPaired, kSolo };

struct WhiteEdge {
  EndpointPair endpoints;
  std::int64_t weight = 0;
  WhiteOrigin origin = WhiteOrigin::kPaired;
};

struct FaceUncrossPlan {
  std::string face;
  FaceTerminals terminals;
  std::vector<SelectionStep> steps;
  std::vector<SelectedPair> pairs;  // selection order
  std::vector<WhiteEdge> white;     // sorted by (endpoints, origin)
  std::map<EndpointPair, std::int64_t> red;
  EndpointPair chord;  // {u_k, u_m}
  // Pooled request of each bilateral pair before selection.
  std::map<EndpointPair, std::int64_t> bilateral;
};

// Runs the extreme-index selection on one face until no bilateral demand
// remains. Throws InstanceError if the face is unknown or has no terminals.
FaceUncrossPlan select_pairs(const PlanarInstance& inst, std::string_view face);

struct LevelPlan {
  std::vector<FaceUncrossPlan> faces;  // faces with >= 2 distinct demands
  PlanarInstance white_instance;       // G with the white edges, doubled
  PlanarInstance residual_instance;    // G + chords, red and untouched demands

  bool fixpoint() const { return faces.empty(); }
  const FaceUncrossPlan* find(std::string_view face) const;
};

// Number of distinct endpoint pairs homed on `face`.
std::size_t distinct_demand_pairs(const PlanarInstance& inst,
                                  std::string_view face);

// Plans every face with at least two distinct demands at once.
LevelPlan plan_level(const PlanarInstance& inst);

}  // namespace planarflow

#endif  // PLANARFLOW_UNCROSSING_HPP_
