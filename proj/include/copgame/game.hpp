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
 * Game runner for the four Cop and Robber models.
 *
 * Order of play is the same in every model: the Cop places, the Robber
 * places, then each round is a Cop move followed by a Robber move. The last
 * round stops after the Cop's move and the board is measured once, at the
 * end. With t rounds the Cop moves t times and the Robber t-1 times.
 */

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "copgame/graph.hpp"
#include "copgame/linalg.hpp"
#include "copgame/quantum_ops.hpp"

namespace copgame {

enum class GameModel { kClassical, kOpenProbabilistic, kClassicalQuantum, kQuantumControlled };

const char* to_string(GameModel m);
/// Accepts "classical", "open_probabilistic", "classical_quantum",
/// "quantum_controlled".
GameModel parse_game_model(std::string_view name);

// What a move callback may look at. Rounds are 1-based.
struct ClassicalView {
  std::size_t round;
  Vertex cop;
  Vertex robber;
};
struct ProbabilisticView {
  std::size_t round;
  const RealVector& cop;
  const RealVector& robber;
};
struct LocalQuantumView {
  std::size_t round;
  const QuantumState& cop;
  const QuantumState& robber;
};

using VertexPolicy = std::function<Vertex(const ClassicalView&)>;
using StochasticPolicy = std::function<GraphStochastic(const ProbabilisticView&)>;
using UnitaryPolicy = std::function<GraphUnitary(const LocalQuantumView&)>;
/// Quantum controlled players only learn the round number.
using ControlledPolicy = std::function<ControlledOp(std::size_t round)>;

/// Classical Robber placement chosen after seeing the Cop's vertex.
using VertexPlacement = std::function<Vertex(Vertex cop)>;

/// Robber's opening in the quantum controlled game: when the Cop sits on v
/// the Robber prepares chi[v]. The joint start is sum_v a_v chi[v] (x) |v>.
struct Entangler {
  std::vector<QuantumState> chi;
};

using InitialState =
    std::variant<Vertex, VertexPlacement, RealVector, QuantumState, Entangler>;
using MovePolicy =
    std::variant<VertexPolicy, StochasticPolicy, UnitaryPolicy, ControlledPolicy>;

struct Strategy {
  std::string name;
  InitialState initial;
  MovePolicy moves;
};

struct Positions {
  Vertex cop;
  Vertex robber;
};
struct Distributions {
  RealVector cop;
  RealVector robber;
};
struct LocalStates {
  ComplexVector cop;
  ComplexVector robber;
};
/// Robber-major joint amplitudes.
struct JointState {
  ComplexVector amps;
};
using GameState = std::variant<Positions, Distributions, LocalStates, JointState>;

struct TraceStep {
  std::size_t round = 0;
  std::optional<Player> mover;  // empty for the opening placement
  GameState state;
};

struct GameTrace {
  GameModel model = GameModel::kClassical;
  std::size_t rounds = 0;
  std::vector<TraceStep> steps;
  double p_copwin = 0.0;
  /// Classical model only: first round after whose Cop move the players
  /// shared a vertex (0 when placed together).
  std::optional<std::size_t> capture_round;
};

/// Joint amplitudes of a quantum step (local states are tensored, robber
/// first). Throws for classical and probabilistic steps.
ComplexVector joint_amplitudes(const GameState& s);

/// Runs a game. Throws IllegalOperation or std::invalid_argument when a
/// strategy does not fit the model or produces an illegal move.
GameTrace play(GameModel model, const Digraph& g, const Strategy& cop,
               const Strategy& robber, std::size_t rounds);

/// sum_v |(<v| (x) <v|) S|^2. Throws unless the dimension is a square.
double p_copwin_joint(const ComplexVector& joint);
double p_copwin_joint(const QuantumState& joint);
double p_copwin_separable(const QuantumState& robber, const QuantumState& cop);
/// Throws unless both are probability vectors of the same length.
double p_copwin_probabilistic(const RealVector& robber, const RealVector& cop);

/// Cop policy for the open probabilistic game against a deterministic Robber:
/// spread uniformly over a dominating set, move the mass dominating the
/// Robber onto him, let it follow him from then on, and re-spread the rest.
class DominatingSweep {
 public:
  /// Throws std::invalid_argument unless g is undirected, reflexive and
  /// connected and `set` dominates it.
  DominatingSweep(const Digraph& g, VertexSet set);

  const Digraph& graph() const { return g_; }
  const VertexSet& set() const { return set_; }
  /// Shortest path between two members of the set.
  const std::vector<Vertex>& route(std::size_t from_index, std::size_t to_index) const;

 private:
  Digraph g_;
  VertexSet set_;
  std::vector<std::vector<Vertex>> routes_;
};

struct SweepView {
  std::size_t step;  // Cop steps taken so far
  Vertex robber;
  const RealVector& cop;
};

/// Deterministic Robber for the open probabilistic game; it sees the Cop's
/// distribution.
struct EvaderPolicy {
  std::function<Vertex(const RealVector& cop)> place;
  std::function<Vertex(const SweepView&)> move;
};

struct SweepOutcome {
  /// Mass following the Robber at measurement.
  double capture_probability = 0.0;
  std::vector<double> captured_after_round;
  std::vector<Vertex> robber_at_catch;
  std::size_t cop_steps = 0;
};

/// Round 1 is a single catching step from the initial spread; every later
/// round re-spreads the free mass along shortest paths and then catches.
SweepOutcome play_unfair_probabilistic(const DominatingSweep& sweep,
                                       const EvaderPolicy& robber, std::size_t rounds);
SweepOutcome play_unfair_probabilistic(const Digraph& g, const VertexSet& dominating,
                                       const EvaderPolicy& robber, std::size_t rounds);

}  // namespace copgame
