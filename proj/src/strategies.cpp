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

#include "copgame/strategies.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace copgame {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_c4(const Digraph& g, const char* what) {
  if (!(g == Digraph::cycle(4))) {
    throw std::invalid_argument(std::string(what) + " is defined on the reflexive 4-cycle only");
  }
}

// C4 gather re-centered so that the support {s, s+1, s+2} collapses onto s+1.
GraphUnitary rotated_c4_gather(const C4Amplitudes& amps, std::size_t s) {
  const auto perm = rotation(4, s % 4);
  return relabel(gather_unitary_c4(amps, 0.0, 0.0), perm);
}

}  // namespace

Strategy uniform_spread(const Digraph& g, GameModel model, Player role) {
  const std::size_t n = g.size();
  if (n == 0) throw std::invalid_argument("uniform_spread needs a non-empty graph");
  switch (model) {
    case GameModel::kOpenProbabilistic: {
      auto id = std::make_shared<const GraphStochastic>(GraphStochastic::identity(g));
      return {"uniform_spread", RealVector(RealVector::Constant(idx(n), 1.0 / static_cast<double>(n))),
              StochasticPolicy([id](const ProbabilisticView&) { return *id; })};
    }
    case GameModel::kClassicalQuantum: {
      auto id = std::make_shared<const GraphUnitary>(GraphUnitary::identity(g));
      return {"uniform_spread", QuantumState::uniform(n),
              UnitaryPolicy([id](const LocalQuantumView&) { return *id; })};
    }
    case GameModel::kQuantumControlled: {
      auto id = std::make_shared<const ControlledOp>(
          ControlledOp::constant(opponent(role), GraphUnitary::identity(g)));
      return {"uniform_spread", QuantumState::uniform(n),
              ControlledPolicy([id](std::size_t) { return *id; })};
    }
    case GameModel::kClassical:
      break;
  }
  throw std::invalid_argument("uniform_spread has no classical form");
}

Strategy universal_vertex_catch(const Digraph& g, std::optional<Vertex> v_c) {
  if (!v_c) v_c = universal_vertex(g);
  if (!v_c) throw std::invalid_argument("graph has no universal vertex");
  const Vertex hub = *v_c;
  if (hub >= g.size() || !g.is_undirected() || !g.is_reflexive()) {
    throw std::invalid_argument("universal_vertex_catch needs an undirected reflexive graph");
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!g.has_arc(hub, v)) {
      throw std::invalid_argument("vertex " + std::to_string(hub) + " is not universal");
    }
  }
  std::vector<GraphUnitary> swaps;
  for (Vertex v = 0; v < g.size(); ++v) swaps.push_back(transposition_unitary(g, v, hub));
  auto catch_op = std::make_shared<const ControlledOp>(controlled_op(g, swaps, Player::kRobber));
  auto idle = std::make_shared<const ControlledOp>(
      ControlledOp::constant(Player::kRobber, GraphUnitary::identity(g)));
  return {"universal_vertex_catch", QuantumState::basis(g.size(), hub),
          ControlledPolicy([catch_op, idle](std::size_t round) {
            return round == 1 ? *catch_op : *idle;
          })};
}

ControlledOp antipodal_response(const ComplexVector& joint) {
  if (joint.size() != 16) throw std::invalid_argument("antipodal_response needs a C4 joint state");
  const Digraph c4 = Digraph::cycle(4);
  std::vector<GraphUnitary> blocks;
  for (std::size_t c = 0; c < 4; ++c) {
    ComplexVector conditional(4);
    for (std::size_t r = 0; r < 4; ++r) conditional(idx(r)) = joint(idx(r * 4 + c));
    // Legal Cop moves keep the Robber's conditional state on N(c+2).
    if (std::abs(conditional(idx(c))) > kTolerance) {
      throw std::logic_error("robber amplitude found on the cop's own vertex " +
                             std::to_string(c) + "; cop move bookkeeping is inconsistent");
    }
    const auto amps = c4_amplitudes(conditional, c + 1);
    blocks.push_back(amps ? rotated_c4_gather(*amps, c + 1) : GraphUnitary::identity(c4));
  }
  return ControlledOp(Player::kCop, std::move(blocks));
}

Strategy c4_antipodal_evasion(const Digraph& g, const Strategy& cop) {
  require_c4(g, "c4_antipodal_evasion");
  const auto* cop_start = std::get_if<QuantumState>(&cop.initial);
  const auto* cop_moves = std::get_if<ControlledPolicy>(&cop.moves);
  if (!cop_start || !cop_moves || cop_start->dim() != 4) {
    throw std::invalid_argument("c4_antipodal_evasion needs a quantum controlled cop strategy");
  }
  Entangler opening;
  for (std::size_t v = 0; v < 4; ++v) opening.chi.push_back(QuantumState::basis(4, (v + 2) % 4));

  // Replays the game from the start; the Cop's policy depends only on the
  // round number, so the Robber can reconstruct the joint state exactly.
  const QuantumState c0 = *cop_start;
  const ControlledPolicy cop_policy = *cop_moves;
  ControlledPolicy respond = [c0, cop_policy](std::size_t round) {
    ComplexVector joint = ComplexVector::Zero(16);
    for (std::size_t v = 0; v < 4; ++v) joint(idx(((v + 2) % 4) * 4 + v)) = c0[v];
    for (std::size_t j = 1;; ++j) {
      joint = cop_policy(j).apply(joint);
      ControlledOp answer = antipodal_response(joint);
      if (j == round) return answer;
      joint = answer.apply(joint);
    }
  };
  return {"c4_antipodal_evasion", std::move(opening), std::move(respond)};
}

Strategy c4_unfair_cop(const Digraph& g) {
  require_c4(g, "c4_unfair_cop");
  const double third = 1.0 / std::sqrt(3.0);
  const C4Amplitudes even{third, 0.0, third, 0.0, third, 0.0};
  std::vector<GraphUnitary> blocks;
  for (std::size_t i = 0; i < 4; ++i) blocks.push_back(rotated_c4_gather(even, i + 3));
  auto gather = std::make_shared<const ControlledOp>(controlled_op(g, blocks, Player::kRobber));
  auto idle = std::make_shared<const ControlledOp>(
      ControlledOp::constant(Player::kRobber, GraphUnitary::identity(g)));
  return {"c4_unfair_cop", QuantumState::uniform(4),
          ControlledPolicy([gather, idle](std::size_t round) {
            return round == 1 ? *gather : *idle;
          })};
}

DominatingSweep dominating_set_sweep(const Digraph& g, const VertexSet& dominating) {
  return DominatingSweep(g, dominating);
}

Strategy classical_pursuit(const Digraph& g) {
  auto table = std::make_shared<const PursuitTable>(g);
  if (!table->cop_wins()) throw std::invalid_argument("graph is not cop-win");
  return {"classical_pursuit", *table->cop_start(),
          VertexPolicy([table](const ClassicalView& view) {
            if (table->graph().has_arc(view.cop, view.robber)) return view.robber;
            return table->best_cop_move(view.cop, view.robber);
          })};
}

Strategy scripted_classical(Player role, InitialState start, std::vector<Vertex> moves) {
  auto list = std::make_shared<const std::vector<Vertex>>(std::move(moves));
  return {"scripted", std::move(start), VertexPolicy([list, role](const ClassicalView& view) {
            if (view.round <= list->size()) return (*list)[view.round - 1];
            return role == Player::kCop ? view.cop : view.robber;
          })};
}

Strategy scripted_stochastic(const Digraph& g, RealVector start,
                             std::vector<GraphStochastic> moves) {
  auto list = std::make_shared<const std::vector<GraphStochastic>>(std::move(moves));
  auto id = std::make_shared<const GraphStochastic>(GraphStochastic::identity(g));
  return {"scripted", std::move(start),
          StochasticPolicy([list, id](const ProbabilisticView& view) {
            return view.round <= list->size() ? (*list)[view.round - 1] : *id;
          })};
}

Strategy scripted_unitary(const Digraph& g, QuantumState start, std::vector<GraphUnitary> moves) {
  auto list = std::make_shared<const std::vector<GraphUnitary>>(std::move(moves));
  auto id = std::make_shared<const GraphUnitary>(GraphUnitary::identity(g));
  return {"scripted", std::move(start), UnitaryPolicy([list, id](const LocalQuantumView& view) {
            return view.round <= list->size() ? (*list)[view.round - 1] : *id;
          })};
}

Strategy scripted_controlled(const Digraph& g, Player role, InitialState start,
                             std::vector<ControlledOp> moves) {
  auto list = std::make_shared<const std::vector<ControlledOp>>(std::move(moves));
  auto id = std::make_shared<const ControlledOp>(
      ControlledOp::constant(opponent(role), GraphUnitary::identity(g)));
  return {"scripted", std::move(start), ControlledPolicy([list, id](std::size_t round) {
            return round <= list->size() ? (*list)[round - 1] : *id;
          })};
}

}  // namespace copgame
