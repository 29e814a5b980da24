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

#ifndef PLANARFLOW_INSTANCE_HPP_
#define PLANARFLOW_INSTANCE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace planarflow {

using VertexId = std::string;

// Unordered vertex pair, stored with first <= second.
struct EndpointPair {
  VertexId first;
  VertexId second;

  EndpointPair() = default;
  EndpointPair(VertexId a, VertexId b);

  bool contains(const VertexId& v) const { return v == first || v == second; }
  // The endpoint that is not `v`. `v` must be one of the endpoints.
  const VertexId& other(const VertexId& v) const;
  std::string str() const;

  auto operator<=>(const EndpointPair&) const = default;
};

struct SupplyEdge {
  std::string id;
  VertexId u;
  VertexId v;
  std::int64_t capacity = 0;

  EndpointPair endpoints() const { return {u, v}; }
};

// A face is the cyclic sequence of vertices along its boundary.
struct Face {
  std::string id;
  std::vector<VertexId> boundary;
  bool outer = false;

  bool on_boundary(const VertexId& v) const;
};

struct Demand {
  std::string id;
  VertexId s;
  VertexId t;
  std::int64_t request = 0;
  std::string face;

  EndpointPair endpoints() const { return {s, t}; }
};

// Embedded planar supply graph with capacities plus face-homed demands.
// Containers keep document order; serialize() emits the canonical order.
struct PlanarInstance {
  std::vector<VertexId> vertices;
  std::vector<SupplyEdge> edges;
  std::vector<Face> faces;
  std::vector<Demand> demands;

  const Face* find_face(std::string_view id) const;
  const Demand* find_demand(std::string_view id) const;
  bool has_vertex(std::string_view v) const;
  std::int64_t total_request() const;
};

// Thrown by parse_instance(); carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Thrown when an operation's precondition on an instance does not hold.
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PlanarInstance parse_instance(std::string_view text);
std::string serialize(const PlanarInstance& inst);

PlanarInstance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const PlanarInstance& inst);

struct Violation {
  std::string kind;     // stable tag, e.g. "euler", "edge-face-count"
  std::string element;  // offending identifier(s)
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view kind) const;
};

// Checks every structural invariant. Violations are returned, never thrown.
ValidationReport validate(const PlanarInstance& inst);

// The demand endpoints on one face in boundary order. Index 0 is u_1.
// Positions [0, k) form the first half and [k, m) the second half.
struct FaceTerminals {
  std::string face;
  std::vector<VertexId> terminals;
  std::size_t m = 0;
  std::size_t k = 0;

  std::optional<std::size_t> index_of(const VertexId& v) const;
  // Throws InstanceError when `v` is not a terminal of this face.
  std::size_t position(const VertexId& v) const;
  bool in_first_half(std::size_t index) const { return index < k; }
  bool is_bilateral(const EndpointPair& p) const;
  std::vector<VertexId> first_half() const;
  std::vector<VertexId> second_half() const;
};

FaceTerminals face_terminals(const PlanarInstance& inst, std::string_view face);

// Splits `face` with a new capacity-0 edge {a, b} and re-homes its demands.
// The arc holding the boundary's first vertex keeps the suffix ".1".
PlanarInstance insert_zero_chord(const PlanarInstance& inst,
                                 std::string_view face, const VertexId& a,
                                 const VertexId& b);

// Every capacity and every request multiplied by two.
PlanarInstance doubled(const PlanarInstance& inst);

// Returns `base` if unused in `taken`, else `base~2`, `base~3`, ...
std::string fresh_id(const std::string& base,
                     const std::vector<std::string>& taken);

}  // namespace planarflow

#endif  // PLANARFLOW_INSTANCE_HPP_
