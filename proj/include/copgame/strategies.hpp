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

#pragma once

#include <optional>
#include <vector>

#include "copgame/game.hpp"

namespace copgame {

/// Uniform start (probability 1/n or amplitude 1/sqrt(n)) and identity moves.
/// Not defined for the classical model.
Strategy uniform_spread(const Digraph& g, GameModel model, Player role = Player::kCop);

/// Quantum controlled Cop: start on the universal vertex v_c, then swap
/// v_c with the Robber's vertex under control of the Robber's register. Any
/// separable Robber start sum_v a_v|v> ends as sum_v a_v|v,v> after round 1.
/// Later rounds are identities. Defaults to the lowest universal vertex.
Strategy universal_vertex_catch(const Digraph& g, std::optional<Vertex> v_c = std::nullopt);

/// Quantum controlled Robber on the reflexive 4-cycle that keeps the joint
/// state on antipodal pairs (c+2, c). It knows the Cop's strategy and replays
/// it to find its conditional state for each Cop vertex, which it gathers
/// onto c+2 with a rotated C4 gather. Throws std::logic_error during play if
/// a conditional state leaks onto the Cop's own vertex.
Strategy c4_antipodal_evasion(const Digraph& g, const Strategy& cop);

/// The Robber's answer for one joint state sitting right after a Cop move.
ControlledOp antipodal_response(const ComplexVector& joint);

/// Quantum controlled Cop on the reflexive 4-cycle against a local Robber:
/// uniform start, then for Robber vertex i a rotated C4 gather that moves
/// the Cop's weight on i-1, i, i+1 onto i. Capture probability 3/4.
Strategy c4_unfair_cop(const Digraph& g);

/// Validated policy for play_unfair_probabilistic.
DominatingSweep dominating_set_sweep(const Digraph& g, const VertexSet& dominating);

/// Classical Cop read off the backward-induction table; steps onto the
/// Robber whenever adjacent. Throws std::invalid_argument if g is not
/// cop-win.
Strategy classical_pursuit(const Digraph& g);

// Fixed move lists. Rounds past the end of the list stay put.
Strategy scripted_classical(Player role, InitialState start, std::vector<Vertex> moves);
Strategy scripted_stochastic(const Digraph& g, RealVector start,
                             std::vector<GraphStochastic> moves);
Strategy scripted_unitary(const Digraph& g, QuantumState start, std::vector<GraphUnitary> moves);
Strategy scripted_controlled(const Digraph& g, Player role, InitialState start,
                             std::vector<ControlledOp> moves);

}  // namespace copgame
