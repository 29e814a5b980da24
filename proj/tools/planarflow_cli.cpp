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

// planarflow: command-line front end.
//
// Exit status: 0 success or positive verdict, 1 negative verdict or failed
// routing, 2 usage, input or I/O error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "planarflow/bounds.hpp"
#include "planarflow/cut_oracle.hpp"
#include "planarflow/driver.hpp"
#include "planarflow/generator.hpp"
#include "planarflow/instance.hpp"
#include "planarflow/router.hpp"
#include "planarflow/uncrossing.hpp"

namespace pf = planarflow;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : " ") + s;
  return out;
}

int cmd_validate(const std::string& path) {
  pf::ValidationReport report = pf::validate(pf::read_instance_file(path));
  if (report.ok()) {
    std::cout << "ok\n";
    return kOk;
  }
  for (const auto& v : report.violations)
    std::cout << "violation " << v.kind << ' ' << v.element << ": " << v.message
              << '\n';
  return kNegative;
}

void print_witness(const pf::CutWitness& w) {
  std::cout << "violated side " << join(w.side) << " capacity "
            << w.capacity_across << " request " << w.request_across
            << " central " << (w.central ? "yes" : "no") << '\n';
}

int cmd_check_cut(const std::string& path, bool central_only,
                  std::size_t max_vertices) {
  auto inst = pf::read_instance_file(path);
  auto witness = pf::check_cut_condition(
      inst, central_only ? pf::CutMode::kCentralOnly : pf::CutMode::kAllCuts,
      max_vertices);
  if (!witness) {
    std::cout << "ok\n";
    return kOk;
  }
  print_witness(*witness);
  return kNegative;
}

void print_plan(const pf::FaceUncrossPlan& plan) {
  const auto& t = plan.terminals;
  std::cout << "face " << plan.face << " terminals " << join(t.terminals)
            << " m " << t.m << " k " << t.k << '\n';
  std::size_t pair_index = 0;
  for (std::size_t s = 0; s < plan.steps.size(); ++s) {
    const auto& st = plan.steps[s];
    std::cout << "step " << s + 1 << " i " << st.low_left + 1 << " j "
              << st.low_right + 1 << " i' " << st.high_left + 1 << " j' "
              << st.high_right + 1 << " m " << st.amount;
    if (st.solo()) {
      pf::EndpointPair e(t.terminals[st.low_left], t.terminals[st.low_right]);
      std::cout << " solo " << e.str() << " white " << e.str() << '\n';
      continue;
    }
    const auto& sp = plan.pairs[pair_index++];
    std::cout << " pair " << sp.low_edge().str() << ' ' << sp.high_edge().str()
              << " white " << sp.white().str() << " red "
              << sp.red_first_half().str() << ' ' << sp.red_second_half().str()
              << '\n';
  }
  for (const auto& w : plan.white)
    std::cout << "white " << w.endpoints.str() << ' ' << w.weight << ' '
              << (w.origin == pf::WhiteOrigin::kSolo ? "solo" : "paired")
              << '\n';
  for (const auto& [pair, request] : plan.red)
    std::cout << "red " << pair.str() << ' ' << request << '\n';
  std::cout << "chord " << plan.chord.first << ' ' << plan.chord.second << '\n';
}

int cmd_uncross_demo(const std::string& path, const std::string& face) {
  auto inst = pf::read_instance_file(path);
  if (!face.empty()) {
    print_plan(pf::select_pairs(inst, face));
    return kOk;
  }
  for (const auto& f : inst.faces)
    if (pf::distinct_demand_pairs(inst, f.id) >= 2)
      print_plan(pf::select_pairs(inst, f.id));
  return kOk;
}

int cmd_route(const std::string& path, std::uint64_t budget,
              const std::string& out_path) {
  auto inst = pf::read_instance_file(path);
  pf::DriverOptions options;
  options.router.budget = budget;
  pf::DriverResult result;
  try {
    result = pf::route_with_bound(inst, options);
  } catch (const pf::CutConditionViolated& e) {
    std::cout << "cut condition ";
    print_witness(e.witness());
    return kNegative;
  } catch (const pf::RouterBudgetExceeded& e) {
    std::cout << "error " << e.what() << '\n';
    return kNegative;
  }
  std::ostringstream text;
  text << pf::format_routing(result.routing);
  text << "congestion " << pf::format_alpha(result.routing.alpha) << " bound "
       << result.bound << " k " << result.k << " levels " << result.levels
       << '\n';
  if (out_path.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text.str();
  }
  return kOk;
}

int cmd_verify(const std::string& inst_path, const std::string& routing_path,
               std::int64_t alpha) {
  auto inst = pf::read_instance_file(inst_path);
  std::ifstream in(routing_path);
  if (!in) throw std::runtime_error("cannot open '" + routing_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto routing = pf::parse_routing(buf.str());
  if (auto v = pf::verify_routing(inst, routing, alpha)) {
    std::cout << "violation " << v->kind << ' ' << v->element << ": "
              << v->message << '\n';
    return kNegative;
  }
  std::cout << "ok\n";
  return kOk;
}

int cmd_bounds(const std::string& n_text, std::uint64_t c, std::uint64_t scan) {
  if (scan > 0) {
    std::cout << "n        min_c  chain_c\n";
    for (std::uint64_t n = 2; n <= scan; n *= 2) {
      std::cout << std::left << std::setw(9) << n << std::setw(7)
                << pf::min_invocations(n);
      if (n >= 3)
        std::cout << pf::chain_invocations(pf::BigInt(n));
      else
        std::cout << '-';
      std::cout << '\n';
    }
    return kOk;
  }
  pf::BigInt n(n_text);
  pf::BoundReport report =
      c > 0 ? pf::bound_report(n, c) : pf::verify_chain(n);
  std::cout << pf::format_report(report);
  return kOk;
}

int cmd_gen(const pf::GeneratorParams& params, const std::string& plant) {
  if (!plant.empty()) {
    auto inst = pf::read_instance_file(plant);
    pf::plant_capacities(inst, params.seed, params.slack);
    std::cout << pf::serialize(inst);
    return kOk;
  }
  std::cout << pf::serialize(pf::generate_instance(params));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar multiflow routing with bounded congestion"};
  app.require_subcommand(1);

  std::string inst_path, routing_path, out_path, face, n_text;
  bool central_only = false;
  std::size_t max_vertices = pf::kDefaultCutVertexBudget;
  std::uint64_t budget = pf::RouterOptions{}.budget;
  std::int64_t alpha = 1;
  std::uint64_t c = 0, scan = 0;
  pf::GeneratorParams gen;
  std::string plant;

  auto* validate = app.add_subcommand("validate", "Check structural invariants");
  validate->add_option("instance", inst_path)->required();

  auto* check_cut = app.add_subcommand("check-cut", "Decide the cut condition");
  check_cut->add_option("instance", inst_path)->required();
  check_cut->add_flag("--central-only", central_only,
                      "Enumerate central cuts only");
  check_cut->add_option("--max-vertices", max_vertices, "Enumeration budget");

  auto* demo = app.add_subcommand("uncross-demo", "Print the pair selection trace");
  demo->add_option("instance", inst_path)->required();
  demo->add_option("--face", face, "Restrict to one face");

  auto* route = app.add_subcommand("route", "Route with the congestion bound");
  route->add_option("instance", inst_path)->required();
  route->add_option("--budget", budget, "Router node-expansion budget");
  route->add_option("-o,--out", out_path, "Write the routing to a file");

  auto* verify = app.add_subcommand("verify", "Check a routing file");
  verify->add_option("instance", inst_path)->required();
  verify->add_option("routing", routing_path)->required();
  verify->add_option("--alpha", alpha, "Allowed congestion")->required();

  auto* bounds = app.add_subcommand("bounds", "Lower-bound counting report");
  auto* n_opt = bounds->add_option("--n", n_text, "Terminal-count parameter");
  bounds->add_option("--c", c, "Invocation count (default: chain value)");
  auto* scan_opt = bounds->add_option("--scan", scan, "min_invocations table up to n");
  n_opt->excludes(scan_opt);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a planted-feasible instance");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--vertices", gen.vertex_budget);
  gen_cmd->add_option("--demands", gen.face_demand_budget, "Demands per face");
  gen_cmd->add_option("--max-request", gen.max_request);
  gen_cmd->add_option("--slack", gen.slack);
  gen_cmd->add_option("--plant", plant,
                      "Re-plant capacities of an existing instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(inst_path);
    if (*check_cut) return cmd_check_cut(inst_path, central_only, max_vertices);
    if (*demo) return cmd_uncross_demo(inst_path, face);
    if (*route) return cmd_route(inst_path, budget, out_path);
    if (*verify) return cmd_verify(inst_path, routing_path, alpha);
    if (*bounds) {
      if (n_text.empty() && scan == 0) {
        std::cerr << bounds->help();
        return kUsage;
      }
      return cmd_bounds(n_text, c, scan);
    }
    if (*gen_cmd) return cmd_gen(gen, plant);
  } catch (const pf::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const pf::InstanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
