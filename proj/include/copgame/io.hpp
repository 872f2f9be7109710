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

/**
 * @file
 * JSON file formats.
 *
 * Graph:     {"n": 4, "arcs": [[0,1],...], "undirected": true, "reflexive": true}
 * Operator:  {"n": 3, "entries": [[row, col, re, im], ...]}   (omitted = 0)
 * State:     [[re, im], ...] or [re, ...]
 * Scenario:  {"model": "quantum_controlled", "graph": <graph or path>,
 *             "rounds": 1, "cop": <strategy>, "robber": <strategy>}
 * Strategy:  {"builtin": "<name>", "params": {...}} or
 *            {"initial": {...}, "moves": [...]}
 */

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"

#include "copgame/game.hpp"

namespace copgame {

using nlohmann::json;

/// Malformed or inconsistent input file.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json read_json_file(const std::filesystem::path& path);

Digraph graph_from_json(const json& j);
/// Loops are implied by "reflexive" and reverse arcs by "undirected"
/// whenever those flags hold.
json graph_to_json(const Digraph& g);

ComplexMatrix operator_from_json(const json& j);
/// Rejects entries with a nonzero imaginary part.
RealMatrix real_operator_from_json(const json& j);
json operator_to_json(const ComplexMatrix& m);
json operator_to_json(const RealMatrix& m);

ComplexVector amplitudes_from_json(const json& j);
json amplitudes_to_json(const ComplexVector& v);
RealVector distribution_from_json(const json& j);
json distribution_to_json(const RealVector& p);

struct Scenario {
  GameModel model = GameModel::kClassical;
  Digraph graph;
  std::size_t rounds = 1;
  json cop;
  json robber;
};

/// A relative graph path is resolved against `base_dir`.
Scenario scenario_from_json(const json& j, const std::filesystem::path& base_dir = {});
json scenario_to_json(const Scenario& s);

/// Result of the unfair open probabilistic game (Cop builtin
/// "dominating_set_sweep").
struct SweepReport {
  VertexSet dominating;
  std::size_t rounds = 0;
  SweepOutcome outcome;
  double bound = 0.0;  // 1 - (1 - 1/|D|)^rounds
};

using ScenarioResult = std::variant<GameTrace, SweepReport>;

/// Builds both strategies and plays the scenario.
ScenarioResult run_scenario(const Scenario& s);
double p_copwin(const ScenarioResult& r);

json trace_to_json(const GameTrace& t);
GameTrace trace_from_json(const json& j);
json sweep_to_json(const SweepReport& r);
json result_to_json(const ScenarioResult& r);

/// Fixed-point number with nine decimals.
std::string format_probability(double p);

}  // namespace copgame
