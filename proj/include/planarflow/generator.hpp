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

#ifndef PLANARFLOW_GENERATOR_HPP_
#define PLANARFLOW_GENERATOR_HPP_

#include <cstdint>
#include <stdexcept>

#include "planarflow/instance.hpp"

namespace planarflow {

struct GeneratorParams {
  std::uint64_t seed = 1;
  int vertex_budget = 6;       // exact vertex count, >= 3
  int face_demand_budget = 2;  // at most this many demands per face
  int max_request = 2;
  std::int64_t slack = 0;  // added to every planted capacity
};

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cycle with random non-crossing chords, random face-homed demands and
// planted capacities. The planted routing guarantees the cut condition.
PlanarInstance generate_instance(const GeneratorParams& params);

// Routes every demand unit along a randomly chosen arc of its home face
// boundary and sets c(e) = load(e) + slack. Existing capacities are
// discarded.
void plant_capacities(PlanarInstance& inst, std::uint64_t seed,
                      std::int64_t slack);

}  // namespace planarflow

#endif  // PLANARFLOW_GENERATOR_HPP_
