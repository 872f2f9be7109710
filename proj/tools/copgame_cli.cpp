// Copyright 2026 The copgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// copgame: run Cop and Robber games, certify operators, build reachability
// sequences and replay the canned worked cases.
//
// Exit codes: 0 success, 1 invalid input (error JSON on stderr), 2 a
// property check failed.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "copgame/graph.hpp"
#include "copgame/io.hpp"
#include "copgame/quantum_ops.hpp"
#include "copgame/reproduce.hpp"

namespace fs = std::filesystem;
using namespace copgame;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kPropertyFailed = 2;

int fail(const std::string& kind, const std::string& message, json extra = json::object()) {
  json err = {{"kind", kind}, {"message", message}};
  for (auto& [k, v] : extra.items()) err[k] = v;
  std::cerr << json{{"error", err}}.dump() << "\n";
  return kInvalid;
}

void write_json(const std::string& path, const json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string flag(bool b) { return b ? "true" : "false"; }

std::string set_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

json report_json(const CertificationReport& r) {
  json v = json::array();
  for (const auto& e : r.violations) v.push_back({e.row, e.col, e.magnitude});
  return {{"size_ok", r.size_ok},
          {"residual", r.residual},
          {"negativity", r.negativity},
          {"tolerance", r.tolerance},
          {"violations", v}};
}

// A state argument: a vertex index, "uniform", or a path to amplitude JSON.
QuantumState parse_state(const std::string& arg, std::size_t n) {
  if (arg == "uniform") return QuantumState::uniform(n);
  if (!arg.empty() && arg.find_first_not_of("0123456789") == std::string::npos) {
    const std::size_t v = std::stoul(arg);
    if (v >= n) throw SchemaError("vertex " + arg + " out of range");
    return QuantumState::basis(n, v);
  }
  const ComplexVector amps = amplitudes_from_json(read_json_file(arg));
  if (static_cast<std::size_t>(amps.size()) != n) {
    throw SchemaError("state " + arg + " has dimension " + std::to_string(amps.size()) +
                      ", graph has " + std::to_string(n) + " vertices");
  }
  return QuantumState(amps);
}

int cmd_run(const std::string& path, const std::string& out) {
  const Scenario s = scenario_from_json(read_json_file(path), fs::path(path).parent_path());
  const ScenarioResult r = run_scenario(s);
  if (!out.empty()) write_json(out, result_to_json(r));
  std::cout << "model=" << to_string(s.model) << " t=" << s.rounds
            << " p_copwin=" << format_probability(p_copwin(r)) << "\n";
  return kOk;
}

int cmd_verify_op(const std::string& op_path, const std::string& graph_path, bool stochastic) {
  const json op = read_json_file(op_path);
  const Digraph g = graph_from_json(read_json_file(graph_path));
  const CertificationReport r = stochastic
                                    ? is_graph_preserving_stochastic(real_operator_from_json(op), g)
                                    : is_graph_preserving_unitary(operator_from_json(op), g);
  std::cout << (r.ok() ? "PASS" : "FAIL") << "\n" << r.summary() << "\n";
  return r.ok() ? kOk : kPropertyFailed;
}

int cmd_reach(const std::string& graph_path, const std::string& from, const std::string& to,
              Vertex root, const std::string& out) {
  const Digraph g = graph_from_json(read_json_file(graph_path));
  if (root >= g.size()) throw SchemaError("root out of range");
  const QuantumState phi = parse_state(from, g.size());
  const QuantumState psi = parse_state(to, g.size());
  const auto seq = reach_sequence(g, phi, psi, root);
  const double fidelity = compose_apply(seq, phi).fidelity(psi);
  const std::size_t bound = 2 * g.size() - 2;
  bool certified = true;
  json ops = json::array();
  for (const auto& u : seq) {
    ops.push_back(operator_to_json(u.matrix()));
    certified = certified && is_graph_preserving_unitary(u.matrix(), g).ok();
  }
  const bool ok = seq.size() <= bound && fidelity >= 1.0 - kTolerance && certified;
  if (!out.empty()) {
    write_json(out, {{"operators", ops},
                     {"length", seq.size()},
                     {"bound", bound},
                     {"within_bound", seq.size() <= bound},
                     {"fidelity", fidelity}});
  }
  std::cout << "length=" << seq.size() << " bound=" << bound
            << " within_bound=" << flag(seq.size() <= bound)
            << " fidelity=" << format_probability(fidelity) << " certified=" << flag(certified)
            << "\n";
  return ok ? kOk : kPropertyFailed;
}

int cmd_analyze(const std::string& graph_path, const std::string& out) {
  const Digraph g = graph_from_json(read_json_file(graph_path));
  json report = {{"n", g.size()},
                 {"reflexive", g.is_reflexive()},
                 {"undirected", g.is_undirected()},
                 {"reversible", is_reversible(g)}};
  std::cout << "n=" << g.size() << " reflexive=" << flag(g.is_reflexive())
            << " undirected=" << flag(g.is_undirected())
            << " reversible=" << flag(is_reversible(g)) << "\n";

  const bool game_graph = g.size() > 0 && g.is_undirected() && g.is_reflexive();
  if (game_graph) {
    VertexSet corners;
    json witnesses = json::object();
    for (Vertex v = 0; v < g.size(); ++v) {
      if (const auto u = is_corner(g, v)) {
        corners.push_back(v);
        witnesses[std::to_string(v)] = *u;
      }
    }
    report["corners"] = corners;
    report["corner_witness"] = witnesses;
    std::cout << "corners=" << set_string(corners) << "\n";
  }
  if (game_graph && is_connected_undirected(g)) {
    const bool dismantle = is_copwin_dismantle(g);
    report["copwin"] = dismantle;
    std::cout << "copwin=" << flag(dismantle);
    if (g.size() <= kDefaultSolverCap) {
      const bool oracle = solve_copwin_game(g);
      report["copwin_oracle"] = oracle;
      std::cout << " oracle=" << flag(oracle);
    } else {
      std::cout << " oracle=skipped";
    }
    std::cout << "\n";
  } else {
    std::cout << "copwin=n/a\n";
  }
  if (g.size() > 0) {
    const VertexSet d = dominating_set(g);
    report["dominating_set"] = d;
    std::cout << "dominating_set=" << set_string(d) << "\n";
  }
  const auto u = universal_vertex(g);
  report["universal"] = u ? json(*u) : json(nullptr);
  std::cout << "universal=" << (u ? std::to_string(*u) : "none") << "\n";
  if (!out.empty()) write_json(out, report);
  return kOk;
}

void print_case(const CaseReport& r) {
  std::cout << r.name << " expected=" << r.expected
            << " observed=" << (r.observed != 0.0 && std::abs(r.observed) < 1e-6
                                    ? [&] {
                                        char buf[32];
                                        std::snprintf(buf, sizeof buf, "%.3e", r.observed);
                                        return std::string(buf);
                                      }()
                                    : format_probability(r.observed))
            << " " << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << "\n";
}

int cmd_reproduce(const std::string& name, bool all, std::uint64_t seed) {
  std::vector<std::string> names;
  if (all) {
    names = reproduce_cases();
  } else {
    if (name.empty()) throw SchemaError("give a case name or --all");
    const auto& known = reproduce_cases();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw SchemaError("unknown case '" + name + "'");
    }
    names = {name};
  }
  std::vector<std::future<CaseReport>> jobs;
  for (const auto& n : names) {
    jobs.push_back(std::async(all ? std::launch::async : std::launch::deferred,
                              [n, seed] { return reproduce_case(n, seed); }));
  }
  bool ok = true;
  for (auto& j : jobs) {
    const CaseReport r = j.get();
    print_case(r);
    ok = ok && r.pass;
  }
  return ok ? kOk : kPropertyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cop and Robber games on graphs: classical, probabilistic and quantum models"};
  app.require_subcommand(1);

  std::string path, out, op_path, graph_path, from, to, name;
  Vertex root = 0;
  std::uint64_t seed = 0;
  bool stochastic = false, unitary = false, all = false;

  auto* run = app.add_subcommand("run", "Play a scenario and print the capture probability");
  run->add_option("scenario", path, "Scenario JSON")->required();
  run->add_option("--out", out, "Write the trace JSON here ('-' for stdout)");

  auto* verify = app.add_subcommand("verify-op", "Check an operator against a graph");
  verify->add_option("operator", op_path, "Operator JSON")->required();
  verify->add_option("graph", graph_path, "Graph JSON")->required();
  auto* st = verify->add_flag("--stochastic", stochastic, "Column-stochastic check");
  auto* un = verify->add_flag("--unitary", unitary, "Unitary check");
  st->excludes(un);

  auto* reach = app.add_subcommand("reach", "Build a unitary sequence taking one state to another");
  reach->add_option("graph", graph_path, "Graph JSON")->required();
  reach->add_option("--from", from, "Vertex index, 'uniform' or amplitude JSON")->required();
  reach->add_option("--to", to, "Vertex index, 'uniform' or amplitude JSON")->required();
  reach->add_option("--root", root, "Spanning tree root")->default_val(0);
  reach->add_option("--out", out, "Write the operator sequence JSON here ('-' for stdout)");

  auto* analyze = app.add_subcommand("analyze-graph", "Structural report for a graph");
  analyze->add_option("graph", graph_path, "Graph JSON")->required();
  analyze->add_option("--out", out, "Write the report JSON here ('-' for stdout)");

  auto* repro = app.add_subcommand("reproduce", "Replay a canned worked case");
  repro->add_option("case", name, "Case name");
  repro->add_flag("--all", all, "Run every case");
  repro->add_option("--seed", seed, "Seed for randomized cases")->default_val(0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what());
  }

  try {
    if (*run) return cmd_run(path, out);
    if (*verify) return cmd_verify_op(op_path, graph_path, stochastic);
    if (*reach) return cmd_reach(graph_path, from, to, root, out);
    if (*analyze) return cmd_analyze(graph_path, out);
    if (*repro) return cmd_reproduce(name, all, seed);
  } catch (const IllegalOperation& e) {
    return fail("illegal_operation", e.what(), {{"report", report_json(e.report())}});
  } catch (const SchemaError& e) {
    return fail("schema", e.what());
  } catch (const json::exception& e) {
    return fail("schema", e.what());
  } catch (const std::exception& e) {
    return fail("validation", e.what());
  }
  return kInvalid;
}
