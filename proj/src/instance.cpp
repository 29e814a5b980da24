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

#include "planarflow/instance.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace planarflow {

EndpointPair::EndpointPair(VertexId a, VertexId b) {
  if (b < a) std::swap(a, b);
  first = std::move(a);
  second = std::move(b);
}

const VertexId& EndpointPair::other(const VertexId& v) const {
  return v == first ? second : first;
}

std::string EndpointPair::str() const { return first + "-" + second; }

bool Face::on_boundary(const VertexId& v) const {
  return std::find(boundary.begin(), boundary.end(), v) != boundary.end();
}

const Face* PlanarInstance::find_face(std::string_view id) const {
  for (const Face& f : faces)
    if (f.id == id) return &f;
  return nullptr;
}

const Demand* PlanarInstance::find_demand(std::string_view id) const {
  for (const Demand& d : demands)
    if (d.id == id) return &d;
  return nullptr;
}

bool PlanarInstance::has_vertex(std::string_view v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::int64_t PlanarInstance::total_request() const {
  std::int64_t total = 0;
  for (const Demand& d : demands) total += d.request;
  return total;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r')
      ++j;
    if (j > i) tokens.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::int64_t parse_count(const std::string& token, std::size_t line,
                         const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
    throw ParseError(line, std::string("expected nonnegative integer ") +
                               what + ", got '" + token + "'");
  return value;
}

struct Reference {
  std::size_t line;
  std::string vertex;
};

}  // namespace

PlanarInstance parse_instance(std::string_view text) {
  PlanarInstance inst;
  std::set<std::string> vertex_ids, edge_ids, face_ids, demand_ids;
  std::vector<Reference> vertex_refs;
  std::vector<std::pair<std::size_t, std::string>> face_refs;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string& kw = tok[0];
    if (kw == "vertex") {
      if (tok.size() != 2) throw ParseError(line_no, "usage: vertex <id>");
      if (!vertex_ids.insert(tok[1]).second)
        throw ParseError(line_no, "duplicate vertex identifier '" + tok[1] + "'");
      inst.vertices.push_back(tok[1]);
    } else if (kw == "edge") {
      if (tok.size() != 5)
        throw ParseError(line_no, "usage: edge <eid> <u> <v> <capacity>");
      if (!edge_ids.insert(tok[1]).second)
        throw ParseError(line_no, "duplicate edge identifier '" + tok[1] + "'");
      vertex_refs.push_back({line_no, tok[2]});
      vertex_refs.push_back({line_no, tok[3]});
      inst.edges.push_back(
          {tok[1], tok[2], tok[3], parse_count(tok[4], line_no, "capacity")});
    } else if (kw == "face") {
      if (tok.size() < 3)
        throw ParseError(line_no, "usage: face <fid> <v1> ... <vk> [outer]");
      if (!face_ids.insert(tok[1]).second)
        throw ParseError(line_no, "duplicate face identifier '" + tok[1] + "'");
      Face face{tok[1], {}, false};
      std::size_t last = tok.size();
      if (tok.back() == "outer") {
        face.outer = true;
        --last;
      }
      for (std::size_t i = 2; i < last; ++i) {
        vertex_refs.push_back({line_no, tok[i]});
        face.boundary.push_back(tok[i]);
      }
      if (face.boundary.size() < 2)
        throw ParseError(line_no, "face boundary needs at least two vertices");
      inst.faces.push_back(std::move(face));
    } else if (kw == "demand") {
      if (tok.size() != 6)
        throw ParseError(line_no,
                         "usage: demand <did> <s> <t> <request> <fid>");
      if (!demand_ids.insert(tok[1]).second)
        throw ParseError(line_no,
                         "duplicate demand identifier '" + tok[1] + "'");
      vertex_refs.push_back({line_no, tok[2]});
      vertex_refs.push_back({line_no, tok[3]});
      face_refs.emplace_back(line_no, tok[5]);
      inst.demands.push_back({tok[1], tok[2], tok[3],
                              parse_count(tok[4], line_no, "request"), tok[5]});
    } else {
      throw ParseError(line_no, "unknown keyword '" + kw + "'");
    }
    if (end == text.size()) break;
  }

  for (const Reference& ref : vertex_refs)
    if (!vertex_ids.contains(ref.vertex))
      throw ParseError(ref.line, "unknown vertex '" + ref.vertex + "'");
  for (const auto& [line, fid] : face_refs)
    if (!face_ids.contains(fid))
      throw ParseError(line, "unknown face '" + fid + "'");
  return inst;
}

std::string serialize(const PlanarInstance& inst) {
  auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
  std::vector<VertexId> vertices = inst.vertices;
  std::sort(vertices.begin(), vertices.end());
  auto edges = inst.edges;
  std::sort(edges.begin(), edges.end(), by_id);
  auto faces = inst.faces;
  std::sort(faces.begin(), faces.end(), by_id);
  auto demands = inst.demands;
  std::sort(demands.begin(), demands.end(), by_id);

  std::ostringstream out;
  for (const auto& v : vertices) out << "vertex " << v << '\n';
  for (const auto& e : edges)
    out << "edge " << e.id << ' ' << e.u << ' ' << e.v << ' ' << e.capacity
        << '\n';
  for (const auto& f : faces) {
    out << "face " << f.id;
    for (const auto& v : f.boundary) out << ' ' << v;
    if (f.outer) out << " outer";
    out << '\n';
  }
  for (const auto& d : demands)
    out << "demand " << d.id << ' ' << d.s << ' ' << d.t << ' ' << d.request
        << ' ' << d.face << '\n';
  return out.str();
}

PlanarInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::string& path, const PlanarInstance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize(inst);
}

bool ValidationReport::has(std::string_view kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate(const PlanarInstance& inst) {
  ValidationReport report;
  auto flag = [&](std::string kind, std::string element, std::string msg) {
    report.violations.push_back(
        {std::move(kind), std::move(element), std::move(msg)});
  };

  std::set<VertexId> vertex_set(inst.vertices.begin(), inst.vertices.end());
  if (vertex_set.size() != inst.vertices.size())
    flag("duplicate-id", "vertices", "vertex identifiers are not unique");

  const long long euler = static_cast<long long>(inst.vertices.size()) -
                          static_cast<long long>(inst.edges.size()) +
                          static_cast<long long>(inst.faces.size());
  if (euler != 2)
    flag("euler", "|V|-|E|+|F|=" + std::to_string(euler),
         "Euler relation |V|-|E|+|F|=2 does not hold");

  std::map<EndpointPair, std::vector<std::string>> edges_by_pair;
  for (const SupplyEdge& e : inst.edges) {
    if (!vertex_set.contains(e.u) || !vertex_set.contains(e.v))
      flag("unknown-vertex", e.id, "edge endpoint is not a vertex");
    if (e.u == e.v) flag("self-loop", e.id, "edge is a self-loop");
    if (e.capacity < 0) flag("negative-capacity", e.id, "capacity below 0");
    edges_by_pair[e.endpoints()].push_back(e.id);
  }

  int outer_faces = 0;
  std::set<VertexId> on_some_face;
  std::map<EndpointPair, std::vector<std::string>> sides;  // pair -> face ids
  for (const Face& f : inst.faces) {
    if (f.outer) ++outer_faces;
    std::set<VertexId> seen;
    for (const VertexId& v : f.boundary) {
      if (!vertex_set.contains(v))
        flag("unknown-vertex", f.id + ":" + v, "face vertex is not a vertex");
      if (!seen.insert(v).second)
        flag("face-not-simple", f.id + ":" + v,
             "face boundary repeats a vertex");
      on_some_face.insert(v);
    }
    if (f.boundary.size() < 2) {
      flag("face-not-simple", f.id, "face boundary is shorter than 2");
      continue;
    }
    for (std::size_t i = 0; i < f.boundary.size(); ++i) {
      EndpointPair p(f.boundary[i], f.boundary[(i + 1) % f.boundary.size()]);
      if (!edges_by_pair.contains(p))
        flag("face-non-edge", f.id + ":" + p.str(),
             "consecutive boundary vertices are not joined by an edge");
      sides[p].push_back(f.id);
    }
  }
  if (outer_faces != 1)
    flag("outer-face-count", std::to_string(outer_faces),
         "exactly one face must be flagged outer");

  // Each edge borders two distinct faces. Parallel edges are anonymous on a
  // boundary, so only their total incidence count can be checked.
  for (const auto& [pair, ids] : edges_by_pair) {
    auto it = sides.find(pair);
    std::size_t incidences = it == sides.end() ? 0 : it->second.size();
    bool bad = incidences != 2 * ids.size();
    if (!bad && ids.size() == 1 && it->second[0] == it->second[1]) bad = true;
    if (bad) {
      std::string element;
      for (const auto& id : ids) element += (element.empty() ? "" : ",") + id;
      flag("edge-face-count", element,
           "edge " + pair.str() + " lies on " + std::to_string(incidences) +
               " face sides, expected " + std::to_string(2 * ids.size()));
    }
  }

  for (const VertexId& v : inst.vertices)
    if (!on_some_face.contains(v))
      flag("isolated-vertex", v, "vertex lies on no face");

  std::set<std::string> demand_ids;
  for (const Demand& d : inst.demands) {
    if (!demand_ids.insert(d.id).second)
      flag("duplicate-id", d.id, "demand identifier repeated");
    if (d.s == d.t) flag("demand-loop", d.id, "demand endpoints coincide");
    if (d.request <= 0)
      flag("request-not-positive", d.id, "demand request must be positive");
    const Face* f = inst.find_face(d.face);
    if (f == nullptr) {
      flag("demand-face-unknown", d.id, "home face '" + d.face + "' missing");
      continue;
    }
    if (!f->on_boundary(d.s) || !f->on_boundary(d.t))
      flag("demand-off-face", d.id,
           "demand endpoint not on home face '" + d.face + "'");
  }
  return report;
}

std::optional<std::size_t> FaceTerminals::index_of(const VertexId& v) const {
  auto it = std::find(terminals.begin(), terminals.end(), v);
  if (it == terminals.end()) return std::nullopt;
  return static_cast<std::size_t>(it - terminals.begin());
}

std::size_t FaceTerminals::position(const VertexId& v) const {
  auto idx = index_of(v);
  if (!idx) throw InstanceError("'" + v + "' is not a terminal of face " + face);
  return *idx;
}

bool FaceTerminals::is_bilateral(const EndpointPair& p) const {
  return in_first_half(position(p.first)) != in_first_half(position(p.second));
}

std::vector<VertexId> FaceTerminals::first_half() const {
  return {terminals.begin(), terminals.begin() + static_cast<long>(k)};
}

std::vector<VertexId> FaceTerminals::second_half() const {
  return {terminals.begin() + static_cast<long>(k), terminals.end()};
}

FaceTerminals face_terminals(const PlanarInstance& inst,
                             std::string_view face) {
  const Face* f = inst.find_face(face);
  if (f == nullptr)
    throw InstanceError("unknown face '" + std::string(face) + "'");
  std::set<VertexId> ends;
  for (const Demand& d : inst.demands) {
    if (d.face != face) continue;
    ends.insert(d.s);
    ends.insert(d.t);
  }
  FaceTerminals out;
  out.face = f->id;
  for (const VertexId& v : f->boundary)
    if (ends.contains(v)) out.terminals.push_back(v);
  if (!out.terminals.empty()) {
    auto smallest = std::min_element(out.terminals.begin(), out.terminals.end());
    std::rotate(out.terminals.begin(), smallest, out.terminals.end());
  }
  out.m = out.terminals.size();
  out.k = out.m / 2;
  return out;
}

std::string fresh_id(const std::string& base,
                     const std::vector<std::string>& taken) {
  auto used = [&](const std::string& id) {
    return std::find(taken.begin(), taken.end(), id) != taken.end();
  };
  if (!used(base)) return base;
  for (int n = 2;; ++n) {
    std::string candidate = base + "~" + std::to_string(n);
    if (!used(candidate)) return candidate;
  }
}

PlanarInstance insert_zero_chord(const PlanarInstance& inst,
                                 std::string_view face, const VertexId& a,
                                 const VertexId& b) {
  auto fit = std::find_if(inst.faces.begin(), inst.faces.end(),
                          [&](const Face& f) { return f.id == face; });
  if (fit == inst.faces.end())
    throw InstanceError("unknown face '" + std::string(face) + "'");
  if (a == b) throw InstanceError("chord endpoints coincide");
  const auto& bd = fit->boundary;
  auto ia = std::find(bd.begin(), bd.end(), a);
  auto ib = std::find(bd.begin(), bd.end(), b);
  if (ia == bd.end() || ib == bd.end())
    throw InstanceError("chord endpoint not on face " + fit->id);
  std::size_t pa = static_cast<std::size_t>(ia - bd.begin());
  std::size_t pb = static_cast<std::size_t>(ib - bd.begin());
  if (pa > pb) std::swap(pa, pb);

  // part1 walks from bd[pb] around through bd[0] to bd[pa]; part2 is the
  // contiguous run bd[pa..pb].
  std::vector<VertexId> part1(bd.begin() + static_cast<long>(pb), bd.end());
  part1.insert(part1.end(), bd.begin(), bd.begin() + static_cast<long>(pa) + 1);
  std::vector<VertexId> part2(bd.begin() + static_cast<long>(pa),
                              bd.begin() + static_cast<long>(pb) + 1);

  std::vector<std::string> face_ids, edge_ids;
  for (const Face& f : inst.faces) face_ids.push_back(f.id);
  for (const SupplyEdge& e : inst.edges) edge_ids.push_back(e.id);
  const std::string base(face);
  Face f1{fresh_id(base + ".1", face_ids), part1, fit->outer};
  face_ids.push_back(f1.id);
  Face f2{fresh_id(base + ".2", face_ids), part2, false};

  PlanarInstance out = inst;
  out.edges.push_back(
      {fresh_id("chord." + base, edge_ids), bd[pa], bd[pb], 0});
  auto oit = out.faces.begin() + (fit - inst.faces.begin());
  *oit = f1;
  out.faces.insert(oit + 1, f2);

  for (Demand& d : out.demands) {
    if (d.face != face) continue;
    if (f1.on_boundary(d.s) && f1.on_boundary(d.t)) {
      d.face = f1.id;
    } else if (f2.on_boundary(d.s) && f2.on_boundary(d.t)) {
      d.face = f2.id;
    } else {
      throw InstanceError("demand " + d.id + " straddles chord " + a + "-" +
                          b + " on face " + std::string(face));
    }
  }
  return out;
}

PlanarInstance doubled(const PlanarInstance& inst) {
  PlanarInstance out = inst;
  for (SupplyEdge& e : out.edges) e.capacity *= 2;
  for (Demand& d : out.demands) d.request *= 2;
  return out;
}

}  // namespace planarflow
