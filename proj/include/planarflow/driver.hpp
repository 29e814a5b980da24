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

#ifndef PLANARFLOW_DRIVER_HPP_
#define PLANARFLOW_DRIVER_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "planarflow/cut_oracle.hpp"
#include "planarflow/instance.hpp"
#include "planarflow/router.hpp"

namespace planarflow {

// 2 * ceil(log2(k)) + 2. Throws std::invalid_argument for k == 0.
std::int64_t congestion_bound(std::int64_t k);

// ceil(log2(k)) for k >= 1.
std::int64_t ceil_log2(std::int64_t k);

// Largest number of terminals on a single face.
std::size_t max_terminals_per_face(const PlanarInstance& inst);

struct DriverResult {
  Routing routing;  // over the input demand identifiers
  std::size_t k = 0;
  std::int64_t bound = 2;
  std::size_t levels = 0;
  // Edge loads of every router call, white phases first, base level last.
  // Keys include the zero-capacity chords added along the way.
  std::vector<std::map<std::string, std::int64_t>> per_level;
};

class CutConditionViolated : public std::runtime_error {
 public:
  explicit CutConditionViolated(CutWitness witness);
  const CutWitness& witness() const { return witness_; }

 private:
  CutWitness witness_;
};

class RouterBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant broken (bound exceeded, too many levels, bad walk
// composition). Never expected on valid input.
class DriverDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DriverOptions {
  RouterOptions router;
};

// Routes every demand with congestion at most congestion_bound(k). Throws
// InstanceError for invalid instances, CutConditionViolated,
// RouterBudgetExceeded or DriverDefect.
DriverResult route_with_bound(const PlanarInstance& inst,
                              const DriverOptions& options = {});

}  // namespace planarflow

#endif  // PLANARFLOW_DRIVER_HPP_
