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

#include "planarflow/router.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>
#include <sstream>

#include "planarflow/cut_oracle.hpp"
#include "planarflow/uncrossing.hpp"

namespace planarflow {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

Routing make_routing(const PlanarInstance& inst,
                     std::map<std::string, std::vector<Walk>> assignments) {
  Routing out;
  out.assignments = std::move(assignments);

  std::map<EndpointPair, std::int64_t> pair_load;
  for (const auto& [id, walks] : out.assignments)
    for (const Walk& w : walks)
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        ++pair_load[EndpointPair(w[i], w[i + 1])];

  std::map<EndpointPair, std::vector<const SupplyEdge*>> parallel;
  for (const SupplyEdge& e : inst.edges) {
    parallel[e.endpoints()].push_back(&e);
    out.loads[e.id] = 0;
  }
  std::int64_t alpha = 0;
  bool infinite = false;
  for (auto& [pair, edges] : parallel) {
    std::sort(edges.begin(), edges.end(),
              [](const SupplyEdge* a, const SupplyEdge* b) { return a->id < b->id; });
    auto it = pair_load.find(pair);
    std::int64_t load = it == pair_load.end() ? 0 : it->second;
    if (load == 0) continue;
    std::int64_t cap = 0;
    for (const SupplyEdge* e : edges) cap += e->capacity;
    if (cap == 0) {
      infinite = true;
      out.loads[edges.front()->id] += load;
      continue;
    }
    const std::int64_t pair_alpha = ceil_div(load, cap);
    alpha = std::max(alpha, pair_alpha);
    for (const SupplyEdge* e : edges) {
      std::int64_t take = std::min(load, pair_alpha * e->capacity);
      out.loads[e->id] += take;
      load -= take;
    }
  }
  if (!infinite) out.alpha = alpha;
  return out;
}

Walk loop_erase(const Walk& walk) {
  Walk out;
  for (const VertexId& v : walk) {
    auto it = std::find(out.begin(), out.end(), v);
    if (it != out.end())
      out.erase(it + 1, out.end());
    else
      out.push_back(v);
  }
  return out;
}

bool is_eulerian(const PlanarInstance& inst) {
  std::map<VertexId, std::int64_t> degree;
  for (const SupplyEdge& e : inst.edges) {
    degree[e.u] += e.capacity;
    degree[e.v] += e.capacity;
  }
  for (const Demand& d : inst.demands) {
    degree[d.s] += d.request;
    degree[d.t] += d.request;
  }
  return std::all_of(degree.begin(), degree.end(),
                     [](const auto& kv) { return kv.second % 2 == 0; });
}

bool is_planar_union(const PlanarInstance& inst) {
  for (const Face& f : inst.faces) {
    std::set<EndpointPair> pairs;
    for (const Demand& d : inst.demands)
      if (d.face == f.id) pairs.insert(d.endpoints());
    if (pairs.size() < 2) continue;
    FaceTerminals terms = face_terminals(inst, f.id);
    for (auto a = pairs.begin(); a != pairs.end(); ++a)
      for (auto b = std::next(a); b != pairs.end(); ++b)
        if (crossed(terms, *a, *b)) return false;
  }
  return true;
}

namespace {

struct Link {
  int a, b;
  std::int64_t capacity;
};

struct Path {
  std::vector<int> vertices;
  std::vector<int> links;
  std::uint64_t link_mask = 0;
};

class BudgetHit {};

// Exhaustive unit-by-unit search. One instance per call.
class MultiflowSearch {
 public:
  MultiflowSearch(const PlanarInstance& inst, std::uint64_t budget)
      : budget_(budget) {
    vertices_ = inst.vertices;
    std::sort(vertices_.begin(), vertices_.end());
    const int n = static_cast<int>(vertices_.size());
    std::map<std::pair<int, int>, std::int64_t> caps;
    for (const SupplyEdge& e : inst.edges) {
      int a = index(e.u), b = index(e.v);
      if (a > b) std::swap(a, b);
      caps[{a, b}] += e.capacity;
    }
    adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [ends, cap] : caps) {
      if (cap <= 0) continue;
      int id = static_cast<int>(links_.size());
      links_.push_back({ends.first, ends.second, cap});
      adjacency_[static_cast<std::size_t>(ends.first)].push_back({ends.second, id});
      adjacency_[static_cast<std::size_t>(ends.second)].push_back({ends.first, id});
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
    residual_.resize(links_.size());
    for (std::size_t i = 0; i < links_.size(); ++i)
      residual_[i] = links_[i].capacity;

    std::vector<const Demand*> order;
    for (const Demand& d : inst.demands) order.push_back(&d);
    std::sort(order.begin(), order.end(),
              [](const Demand* a, const Demand* b) { return a->id < b->id; });
    for (const Demand* d : order) {
      if (d->request <= 0) continue;
      Commodity c{d->id, index(d->s), index(d->t), {}};
      for (std::int64_t u = 0; u < d->request; ++u)
        unit_commodity_.push_back(commodities_.size());
      commodities_.push_back(std::move(c));
    }
  }

  std::uint64_t expansions() const { return expansions_; }

  // Returns walks per demand id, or nullopt when no routing exists.
  std::optional<std::map<std::string, std::vector<Walk>>> run() {
    for (Commodity& c : commodities_) enumerate_paths(c);
    build_cuts();
    for (std::int64_t s : slack_)
      if (s < 0) return std::nullopt;
    chosen_.assign(unit_commodity_.size(), 0);
    if (!place(0)) return std::nullopt;
    std::map<std::string, std::vector<Walk>> out;
    for (std::size_t u = 0; u < unit_commodity_.size(); ++u) {
      const Commodity& c = commodities_[unit_commodity_[u]];
      Walk w;
      for (int v : c.paths[chosen_[u]].vertices)
        w.push_back(vertices_[static_cast<std::size_t>(v)]);
      out[c.id].push_back(std::move(w));
    }
    return out;
  }

 private:
  struct Commodity {
    std::string id;
    int source;
    int target;
    std::vector<Path> paths;
  };
  struct Cut {
    std::uint32_t side;
    std::uint64_t crossing_links;
  };

  int index(const VertexId& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    return static_cast<int>(it - vertices_.begin());
  }

  void tick() {
    if (++expansions_ > budget_) throw BudgetHit{};
  }

  void enumerate_paths(Commodity& c) {
    std::vector<char> on_path(vertices_.size(), 0);
    Path current;
    current.vertices.push_back(c.source);
    on_path[static_cast<std::size_t>(c.source)] = 1;
    extend(c, current, on_path);
    std::sort(c.paths.begin(), c.paths.end(), [](const Path& a, const Path& b) {
      if (a.vertices.size() != b.vertices.size())
        return a.vertices.size() < b.vertices.size();
      return a.vertices < b.vertices;
    });
  }

  void extend(Commodity& c, Path& current, std::vector<char>& on_path) {
    tick();
    const int at = current.vertices.back();
    if (at == c.target) {
      c.paths.push_back(current);
      return;
    }
    for (const auto& [next, link] : adjacency_[static_cast<std::size_t>(at)]) {
      if (on_path[static_cast<std::size_t>(next)]) continue;
      on_path[static_cast<std::size_t>(next)] = 1;
      current.vertices.push_back(next);
      current.links.push_back(link);
      const std::uint64_t saved = current.link_mask;
      if (link < 64) current.link_mask |= std::uint64_t{1} << link;
      extend(c, current, on_path);
      current.link_mask = saved;
      current.links.pop_back();
      current.vertices.pop_back();
      on_path[static_cast<std::size_t>(next)] = 0;
    }
  }

  // Pruning cuts: every central cut of the positive-capacity graph when it
  // is connected (a violated cut implies a violated central one), else
  // every cut. Skipped when the masks would not fit.
  void build_cuts() {
    const std::size_t n = vertices_.size();
    if (links_.size() > 64 || n < 2 || n > 20) return;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> adj(n, 0);
    for (const Link& l : links_) {
      adj[static_cast<std::size_t>(l.a)] |= 1u << l.b;
      adj[static_cast<std::size_t>(l.b)] |= 1u << l.a;
    }
    auto connected = [&](std::uint32_t mask) {
      std::uint32_t seen = mask & (~mask + 1), frontier = seen;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1)
          next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        next &= mask & ~seen;
        seen |= next;
        frontier = next;
      }
      return seen == mask;
    };
    const bool graph_connected = connected(full);
    for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
      const std::uint32_t side = 1u | (rest << 1);
      if (side == full) continue;
      if (graph_connected && (!connected(side) || !connected(full & ~side)))
        continue;
      Cut cut{side, 0};
      std::int64_t slack = 0;
      for (std::size_t i = 0; i < links_.size(); ++i) {
        if (separates(side, links_[i].a, links_[i].b)) {
          cut.crossing_links |= std::uint64_t{1} << i;
          slack += links_[i].capacity;
        }
      }
      for (std::size_t c : unit_commodity_)
        if (separates(side, commodities_[c].source, commodities_[c].target))
          --slack;
      cuts_.push_back(cut);
      slack_.push_back(slack);
    }
  }

  static bool separates(std::uint32_t side, int a, int b) {
    return ((side >> a) & 1u) != ((side >> b) & 1u);
  }

  // Slack drop of each cut when `p` carries one unit of `c`.
  bool apply_cuts(const Commodity& c, const Path& p, int sign) {
    bool ok = true;
    for (std::size_t i = 0; i < cuts_.size(); ++i) {
      std::int64_t drop = std::popcount(p.link_mask & cuts_[i].crossing_links);
      if (separates(cuts_[i].side, c.source, c.target)) --drop;
      slack_[i] -= sign * drop;
      if (slack_[i] < 0) ok = false;
    }
    return ok;
  }

  bool place(std::size_t unit) {
    if (unit == unit_commodity_.size()) return true;
    const std::size_t ci = unit_commodity_[unit];
    const Commodity& c = commodities_[ci];
    std::size_t start = 0;
    if (unit > 0 && unit_commodity_[unit - 1] == ci) start = chosen_[unit - 1];
    for (std::size_t pi = start; pi < c.paths.size(); ++pi) {
      const Path& p = c.paths[pi];
      bool fits = std::all_of(p.links.begin(), p.links.end(), [&](int l) {
        return residual_[static_cast<std::size_t>(l)] > 0;
      });
      if (!fits) continue;
      tick();
      for (int l : p.links) --residual_[static_cast<std::size_t>(l)];
      const bool ok = apply_cuts(c, p, +1);
      if (ok) {
        chosen_[unit] = pi;
        if (place(unit + 1)) return true;
      }
      apply_cuts(c, p, -1);
      for (int l : p.links) ++residual_[static_cast<std::size_t>(l)];
    }
    return false;
  }

  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  std::vector<VertexId> vertices_;
  std::vector<Link> links_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  std::vector<std::int64_t> residual_;
  std::vector<Commodity> commodities_;
  std::vector<std::size_t> unit_commodity_;
  std::vector<std::size_t> chosen_;
  std::vector<Cut> cuts_;
  std::vector<std::int64_t> slack_;
};

}  // namespace

RouteResult route_integer_multiflow(const PlanarInstance& inst,
                                    const RouterOptions& options) {
  RouteResult result;
  MultiflowSearch search(inst, options.budget);
  try {
    auto walks = search.run();
    result.expansions = search.expansions();
    if (walks) {
      result.status = RouteStatus::kRouted;
      result.routing = make_routing(inst, std::move(*walks));
      return result;
    }
  } catch (const BudgetHit&) {
    result.expansions = search.expansions();
    result.status = RouteStatus::kBudgetExceeded;
    return result;
  }
  result.status = RouteStatus::kInfeasible;
  if (inst.vertices.size() <= kDefaultCutVertexBudget && is_eulerian(inst) &&
      is_planar_union(inst) && !check_cut_condition(inst))
    throw ContractViolation(
        "Eulerian planar-union instance satisfies the cut condition but the "
        "search found no integer multiflow");
  return result;
}

std::optional<RoutingViolation> verify_routing(const PlanarInstance& inst,
                                               const Routing& routing,
                                               std::int64_t alpha) {
  std::map<EndpointPair, std::int64_t> capacity;
  for (const SupplyEdge& e : inst.edges) capacity[e.endpoints()] += e.capacity;

  for (const auto& [id, walks] : routing.assignments)
    if (inst.find_demand(id) == nullptr)
      return RoutingViolation{"unknown demand", id,
                              "routing assigns walks to an unknown demand"};

  std::vector<const Demand*> demands;
  for (const Demand& d : inst.demands) demands.push_back(&d);
  std::sort(demands.begin(), demands.end(),
            [](const Demand* a, const Demand* b) { return a->id < b->id; });

  std::map<EndpointPair, std::int64_t> load;
  for (const Demand* d : demands) {
    auto it = routing.assignments.find(d->id);
    const std::size_t count = it == routing.assignments.end() ? 0 : it->second.size();
    if (count != static_cast<std::size_t>(d->request))
      return RoutingViolation{"demand count", d->id,
                              std::to_string(count) + " walks for request " +
                                  std::to_string(d->request)};
    if (count == 0) continue;
    for (const Walk& w : it->second) {
      if (w.size() < 2 || EndpointPair(w.front(), w.back()) != d->endpoints())
        return RoutingViolation{"walk endpoints", d->id,
                                "walk does not join " + d->s + " and " + d->t};
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        EndpointPair step(w[i], w[i + 1]);
        if (!capacity.contains(step))
          return RoutingViolation{"not an edge", d->id + ":" + step.str(),
                                  "walk uses a non-edge"};
        ++load[step];
      }
    }
  }
  for (const auto& [pair, l] : load) {
    const std::int64_t cap = capacity[pair];
    if (cap == 0)
      return RoutingViolation{"zero-capacity edge loaded", pair.str(),
                              "load " + std::to_string(l) + " on capacity 0"};
    if (l > alpha * cap)
      return RoutingViolation{"capacity exceeded", pair.str(),
                              "load " + std::to_string(l) + " > " +
                                  std::to_string(alpha) + " * " +
                                  std::to_string(cap)};
  }
  return std::nullopt;
}

std::string format_alpha(const std::optional<std::int64_t>& alpha) {
  return alpha ? std::to_string(*alpha) : std::string("inf");
}

std::string format_routing(const Routing& routing) {
  std::ostringstream out;
  for (const auto& [id, walks] : routing.assignments) {
    for (const Walk& w : walks) {
      out << "path " << id;
      for (const VertexId& v : w) out << ' ' << v;
      out << '\n';
    }
  }
  for (const auto& [id, l] : routing.loads) out << "load " << id << ' ' << l << '\n';
  out << "alpha " << format_alpha(routing.alpha) << '\n';
  return out.str();
}

Routing parse_routing(std::string_view text) {
  Routing out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto number = [&](const std::string& tok) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
      throw ParseError(line_no, "expected nonnegative integer, got '" + tok + "'");
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty() || tok[0] == "congestion") continue;
    if (tok[0] == "path") {
      if (tok.size() < 4) throw ParseError(line_no, "usage: path <did> <v1> <v2> ...");
      out.assignments[tok[1]].emplace_back(tok.begin() + 2, tok.end());
    } else if (tok[0] == "load") {
      if (tok.size() != 3) throw ParseError(line_no, "usage: load <eid> <n>");
      out.loads[tok[1]] = number(tok[2]);
    } else if (tok[0] == "alpha") {
      if (tok.size() != 2) throw ParseError(line_no, "usage: alpha <n|inf>");
      if (tok[1] == "inf")
        out.alpha.reset();
      else
        out.alpha = number(tok[1]);
    } else {
      throw ParseError(line_no, "unknown keyword '" + tok[0] + "'");
    }
  }
  return out;
}

}  // namespace planarflow
