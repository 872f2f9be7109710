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

#include "copgame/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>

#include "copgame/strategies.hpp"

namespace copgame {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// Runs `f`, turning JSON access errors into SchemaError with context.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

std::size_t as_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw SchemaError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::size_t operator_size(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw SchemaError("operator needs \"n\" and \"entries\"");
  }
  return as_index(j.at("n"), "operator n");
}

const char* mover_name(const std::optional<Player>& p) {
  return p ? to_string(*p) : nullptr;
}

json positions_json(const GameState& s) {
  json out;
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, Positions>) {
          out["cop"] = st.cop;
          out["robber"] = st.robber;
        } else if constexpr (std::is_same_v<T, Distributions>) {
          out["cop"] = distribution_to_json(st.cop);
          out["robber"] = distribution_to_json(st.robber);
        } else if constexpr (std::is_same_v<T, LocalStates>) {
          out["cop"] = amplitudes_to_json(st.cop);
          out["robber"] = amplitudes_to_json(st.robber);
        } else {
          out["joint"] = amplitudes_to_json(st.amps);
        }
      },
      s);
  return out;
}

Strategy builtin_strategy(const std::string& name, const json& params, const Scenario& s,
                          Player role, const Strategy* cop) {
  const Digraph& g = s.graph;
  const auto require = [&](GameModel model, Player who) {
    if (s.model != model || role != who) {
      throw SchemaError("builtin '" + name + "' is a " + to_string(who) + " strategy for the " +
                        to_string(model) + " model");
    }
  };
  if (name == "uniform_spread") return uniform_spread(g, s.model, role);
  if (name == "universal_vertex_catch") {
    require(GameModel::kQuantumControlled, Player::kCop);
    std::optional<Vertex> v;
    if (params.contains("vertex")) v = as_index(params.at("vertex"), "vertex");
    return universal_vertex_catch(g, v);
  }
  if (name == "c4_unfair_cop") {
    require(GameModel::kQuantumControlled, Player::kCop);
    return c4_unfair_cop(g);
  }
  if (name == "c4_antipodal_evasion") {
    require(GameModel::kQuantumControlled, Player::kRobber);
    return c4_antipodal_evasion(g, *cop);
  }
  if (name == "classical_pursuit") {
    require(GameModel::kClassical, Player::kCop);
    return classical_pursuit(g);
  }
  if (name == "dominating_set_sweep") {
    throw SchemaError("dominating_set_sweep is a cop strategy for the open_probabilistic model");
  }
  throw SchemaError("unknown builtin strategy '" + name + "'");
}

ControlledOp controlled_from_json(const json& j, const Digraph& g, Player role) {
  if (j.contains("entries")) {
    return ControlledOp::constant(opponent(role), GraphUnitary(operator_from_json(j), g));
  }
  Player control = opponent(role);
  if (j.contains("control")) {
    const auto c = j.at("control").get<std::string>();
    if (c != "cop" && c != "robber") throw SchemaError("control must be \"cop\" or \"robber\"");
    control = c == "cop" ? Player::kCop : Player::kRobber;
  }
  std::vector<GraphUnitary> blocks;
  for (const auto& b : j.at("blocks")) blocks.emplace_back(operator_from_json(b), g);
  return controlled_op(g, blocks, control);
}

Strategy inline_strategy(const json& spec, const Scenario& s, Player role) {
  const Digraph& g = s.graph;
  const json& init = spec.at("initial");
  const json moves = spec.value("moves", json::array());
  if (!moves.is_array()) throw SchemaError("\"moves\" must be an array");
  switch (s.model) {
    case GameModel::kClassical: {
      std::vector<Vertex> list;
      for (const auto& m : moves) list.push_back(as_index(m, "classical move"));
      return scripted_classical(role, as_index(init.at("vertex"), "initial vertex"),
                                std::move(list));
    }
    case GameModel::kOpenProbabilistic: {
      std::vector<GraphStochastic> list;
      for (const auto& m : moves) list.emplace_back(real_operator_from_json(m), g);
      return scripted_stochastic(g, distribution_from_json(init.at("distribution")),
                                 std::move(list));
    }
    case GameModel::kClassicalQuantum: {
      std::vector<GraphUnitary> list;
      for (const auto& m : moves) list.emplace_back(operator_from_json(m), g);
      return scripted_unitary(g, QuantumState(amplitudes_from_json(init.at("state"))),
                              std::move(list));
    }
    case GameModel::kQuantumControlled: {
      std::vector<ControlledOp> list;
      for (const auto& m : moves) list.push_back(controlled_from_json(m, g, role));
      if (init.contains("entangler")) {
        if (role != Player::kRobber) throw SchemaError("only the robber may open with an entangler");
        Entangler e;
        for (const auto& chi : init.at("entangler")) {
          e.chi.emplace_back(amplitudes_from_json(chi));
        }
        return scripted_controlled(g, role, std::move(e), std::move(list));
      }
      return scripted_controlled(g, role, QuantumState(amplitudes_from_json(init.at("state"))),
                                 std::move(list));
    }
  }
  throw SchemaError("unsupported model");
}

Strategy build_strategy(const json& spec, const Scenario& s, Player role, const Strategy* cop) {
  return guarded("strategy", [&] {
    if (!spec.is_object()) throw SchemaError("strategy spec must be an object");
    if (spec.contains("builtin")) {
      return builtin_strategy(spec.at("builtin").get<std::string>(),
                              spec.value("params", json::object()), s, role, cop);
    }
    if (!spec.contains("initial")) {
      throw SchemaError(std::string(to_string(role)) + " strategy needs \"builtin\" or \"initial\"");
    }
    return inline_strategy(spec, s, role);
  });
}

SweepReport run_sweep(const Scenario& s) {
  if (s.model != GameModel::kOpenProbabilistic) {
    throw SchemaError("dominating_set_sweep runs in the open_probabilistic model");
  }
  return guarded("sweep scenario", [&] {
    SweepReport report;
    const json params = s.cop.value("params", json::object());
    if (params.contains("set")) {
      for (const auto& v : params.at("set")) report.dominating.push_back(as_index(v, "set vertex"));
    } else {
      report.dominating = dominating_set(s.graph);
    }
    const DominatingSweep sweep = dominating_set_sweep(s.graph, report.dominating);
    report.dominating = sweep.set();

    const json& r = s.robber;
    if (!r.is_object() || !r.contains("initial") || !r.at("initial").contains("vertex")) {
      throw SchemaError("the swept robber needs {\"initial\": {\"vertex\": v}, \"moves\": [...]}");
    }
    const Vertex start = as_index(r.at("initial").at("vertex"), "robber vertex");
    auto moves = std::make_shared<std::vector<Vertex>>();
    for (const auto& m : r.value("moves", json::array())) moves->push_back(as_index(m, "robber move"));
    EvaderPolicy robber{[start](const RealVector&) { return start; },
                        [moves](const SweepView& view) {
                          return view.step <= moves->size() ? (*moves)[view.step - 1] : view.robber;
                        }};
    report.rounds = s.rounds;
    report.outcome = play_unfair_probabilistic(sweep, robber, s.rounds);
    report.bound = 1.0 - std::pow(1.0 - 1.0 / static_cast<double>(sweep.set().size()),
                                  static_cast<double>(s.rounds));
    return report;
  });
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

Digraph graph_from_json(const json& j) {
  return guarded("graph", [&] {
    if (!j.is_object() || !j.contains("n")) throw SchemaError("graph needs \"n\"");
    const std::size_t n = as_index(j.at("n"), "graph n");
    std::vector<Arc> arcs;
    for (const auto& a : j.value("arcs", json::array())) {
      if (!a.is_array() || a.size() != 2) throw SchemaError("each arc must be a pair [u, v]");
      arcs.emplace_back(as_index(a[0], "arc endpoint"), as_index(a[1], "arc endpoint"));
    }
    try {
      return Digraph(n, arcs, j.value("undirected", false), j.value("reflexive", false));
    } catch (const std::out_of_range& e) {
      throw SchemaError(e.what());
    }
  });
}

json graph_to_json(const Digraph& g) {
  const bool undirected = g.is_undirected();
  const bool reflexive = g.is_reflexive();
  json arcs = json::array();
  for (const auto& [u, v] : g.arcs()) {
    if (reflexive && u == v) continue;
    if (undirected && u > v) continue;
    arcs.push_back({u, v});
  }
  return {{"n", g.size()}, {"arcs", arcs}, {"undirected", undirected}, {"reflexive", reflexive}};
}

ComplexMatrix operator_from_json(const json& j) {
  return guarded("operator", [&] {
    const std::size_t n = operator_size(j);
    ComplexMatrix m = ComplexMatrix::Zero(idx(n), idx(n));
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 4) {
        throw SchemaError("operator entries are [row, col, re, im]");
      }
      const std::size_t row = as_index(e[0], "row");
      const std::size_t col = as_index(e[1], "col");
      if (row >= n || col >= n) throw SchemaError("operator entry outside the matrix");
      m(idx(row), idx(col)) = cplx(e[2].get<double>(), e[3].get<double>());
    }
    return m;
  });
}

RealMatrix real_operator_from_json(const json& j) {
  const ComplexMatrix m = operator_from_json(j);
  if (m.size() > 0 && m.imag().cwiseAbs().maxCoeff() != 0.0) {
    throw SchemaError("stochastic operator has imaginary entries");
  }
  return m.real();
}

json operator_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    for (Eigen::Index row = 0; row < m.rows(); ++row) {
      const cplx z = m(row, col);
      if (z != cplx(0.0)) entries.push_back({row, col, z.real(), z.imag()});
    }
  }
  return {{"n", m.rows()}, {"entries", entries}};
}

json operator_to_json(const RealMatrix& m) { return operator_to_json(ComplexMatrix(m.cast<cplx>())); }

ComplexVector amplitudes_from_json(const json& j) {
  return guarded("state", [&] {
    if (!j.is_array()) throw SchemaError("state must be an array");
    ComplexVector v(idx(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
      const json& a = j[i];
      if (a.is_number()) {
        v(idx(i)) = a.get<double>();
      } else if (a.is_array() && a.size() == 2) {
        v(idx(i)) = cplx(a[0].get<double>(), a[1].get<double>());
      } else {
        throw SchemaError("amplitudes are numbers or [re, im] pairs");
      }
    }
    return v;
  });
}

json amplitudes_to_json(const ComplexVector& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back({z.real(), z.imag()});
  return out;
}

RealVector distribution_from_json(const json& j) {
  return guarded("distribution", [&] {
    if (!j.is_array()) throw SchemaError("distribution must be an array");
    RealVector p(idx(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) p(idx(i)) = j[i].get<double>();
    return p;
  });
}

json distribution_to_json(const RealVector& p) {
  json out = json::array();
  for (double x : p) out.push_back(x);
  return out;
}

Scenario scenario_from_json(const json& j, const std::filesystem::path& base_dir) {
  return guarded("scenario", [&] {
    if (!j.is_object()) throw SchemaError("scenario must be an object");
    for (const char* key : {"model", "graph", "rounds", "cop", "robber"}) {
      if (!j.contains(key)) throw SchemaError(std::string("scenario needs \"") + key + "\"");
    }
    Scenario s;
    try {
      s.model = parse_game_model(j.at("model").get<std::string>());
    } catch (const SchemaError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what());
    }
    const json& graph = j.at("graph");
    if (graph.is_string()) {
      std::filesystem::path p = graph.get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      s.graph = graph_from_json(read_json_file(p));
    } else {
      s.graph = graph_from_json(graph);
    }
    s.rounds = as_index(j.at("rounds"), "rounds");
    s.cop = j.at("cop");
    s.robber = j.at("robber");
    return s;
  });
}

json scenario_to_json(const Scenario& s) {
  return {{"model", to_string(s.model)},
          {"graph", graph_to_json(s.graph)},
          {"rounds", s.rounds},
          {"cop", s.cop},
          {"robber", s.robber}};
}

ScenarioResult run_scenario(const Scenario& s) {
  if (s.cop.is_object() && s.cop.value("builtin", "") == "dominating_set_sweep") {
    return run_sweep(s);
  }
  const Strategy cop = build_strategy(s.cop, s, Player::kCop, nullptr);
  const Strategy robber = build_strategy(s.robber, s, Player::kRobber, &cop);
  return play(s.model, s.graph, cop, robber, s.rounds);
}

double p_copwin(const ScenarioResult& r) {
  if (const auto* t = std::get_if<GameTrace>(&r)) return t->p_copwin;
  return std::get<SweepReport>(r).outcome.capture_probability;
}

json trace_to_json(const GameTrace& t) {
  json steps = json::array();
  for (const auto& step : t.steps) {
    json js = positions_json(step.state);
    js["round"] = step.round;
    const char* mover = mover_name(step.mover);
    js["mover"] = mover ? json(mover) : json(nullptr);
    steps.push_back(std::move(js));
  }
  json out = {{"model", to_string(t.model)},
              {"rounds", t.rounds},
              {"p_copwin", t.p_copwin},
              {"steps", steps}};
  if (t.capture_round) out["capture_round"] = *t.capture_round;
  return out;
}

GameTrace trace_from_json(const json& j) {
  return guarded("trace", [&] {
    GameTrace t;
    t.model = parse_game_model(j.at("model").get<std::string>());
    t.rounds = as_index(j.at("rounds"), "rounds");
    t.p_copwin = j.at("p_copwin").get<double>();
    if (j.contains("capture_round")) t.capture_round = as_index(j.at("capture_round"), "capture_round");
    for (const auto& js : j.at("steps")) {
      TraceStep step;
      step.round = as_index(js.at("round"), "round");
      if (!js.at("mover").is_null()) {
        step.mover = js.at("mover").get<std::string>() == "cop" ? Player::kCop : Player::kRobber;
      }
      switch (t.model) {
        case GameModel::kClassical:
          step.state = Positions{as_index(js.at("cop"), "cop"), as_index(js.at("robber"), "robber")};
          break;
        case GameModel::kOpenProbabilistic:
          step.state = Distributions{distribution_from_json(js.at("cop")),
                                     distribution_from_json(js.at("robber"))};
          break;
        case GameModel::kClassicalQuantum:
          step.state = LocalStates{amplitudes_from_json(js.at("cop")),
                                   amplitudes_from_json(js.at("robber"))};
          break;
        case GameModel::kQuantumControlled:
          step.state = JointState{amplitudes_from_json(js.at("joint"))};
          break;
      }
      t.steps.push_back(std::move(step));
    }
    return t;
  });
}

json sweep_to_json(const SweepReport& r) {
  return {{"model", to_string(GameModel::kOpenProbabilistic)},
          {"cop", "dominating_set_sweep"},
          {"dominating_set", r.dominating},
          {"rounds", r.rounds},
          {"p_copwin", r.outcome.capture_probability},
          {"bound", r.bound},
          {"captured_after_round", r.outcome.captured_after_round},
          {"robber_at_catch", r.outcome.robber_at_catch},
          {"cop_steps", r.outcome.cop_steps}};
}

json result_to_json(const ScenarioResult& r) {
  if (const auto* t = std::get_if<GameTrace>(&r)) return trace_to_json(*t);
  return sweep_to_json(std::get<SweepReport>(r));
}

std::string format_probability(double p) {
  if (std::abs(p) < 5e-10) p = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", p);
  return buf;
}

}  // namespace copgame
