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

#include "copgame/game.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "copgame/sampling.hpp"
#include "copgame/strategies.hpp"

namespace copgame {
namespace {

constexpr double kTau = kTolerance;

// Robber that always moves to the reply keeping the Cop furthest from a win.
Strategy table_evader(const Digraph& g, Vertex start) {
  auto table = std::make_shared<const PursuitTable>(g);
  return {"table_evader", start, VertexPolicy([table](const ClassicalView& v) {
            const Digraph& h = table->graph();
            Vertex best = v.robber;
            int best_rank = -2;
            for (Vertex r : neighbors(h, v.robber)) {
              int rank = table->cop_to_move_rank(v.cop, r);
              if (rank == PursuitTable::kLost) rank = 1 << 20;
              if (rank > best_rank) best = r, best_rank = rank;
            }
            return best;
          })};
}

TEST(Models, NamesRoundTrip) {
  for (auto m : {GameModel::kClassical, GameModel::kOpenProbabilistic,
                 GameModel::kClassicalQuantum, GameModel::kQuantumControlled}) {
    EXPECT_EQ(parse_game_model(to_string(m)), m);
  }
  EXPECT_THROW(parse_game_model("chess"), std::invalid_argument);
}

TEST(Classical, PursuitWinsOnCopwinGraphs) {
  const Digraph p5 = Digraph::path(5);
  for (Vertex r = 0; r < 5; ++r) {
    const GameTrace t = play(GameModel::kClassical, p5, classical_pursuit(p5), table_evader(p5, r), 8);
    EXPECT_EQ(t.p_copwin, 1.0);
    ASSERT_TRUE(t.capture_round.has_value());
  }
}

TEST(Classical, EvaderSurvivesOnC4) {
  const Digraph c4 = Digraph::cycle(4);
  const Strategy cop = scripted_classical(Player::kCop, Vertex{0}, {1, 2, 3, 0, 1});
  const GameTrace t = play(GameModel::kClassical, c4, cop, table_evader(c4, 2), 5);
  EXPECT_EQ(t.p_copwin, 0.0);
  EXPECT_FALSE(t.capture_round.has_value());
}

TEST(Classical, TimelineHasTwoTStepsWithCopLast) {
  const Digraph p3 = Digraph::path(3);
  const GameTrace t = play(GameModel::kClassical, p3, scripted_classical(Player::kCop, Vertex{0}, {}),
                           scripted_classical(Player::kRobber, Vertex{2}, {1, 1}), 3);
  ASSERT_EQ(t.steps.size(), 6u);
  EXPECT_FALSE(t.steps[0].mover.has_value());
  for (std::size_t i = 1; i < 6; ++i) {
    EXPECT_EQ(*t.steps[i].mover, i % 2 == 1 ? Player::kCop : Player::kRobber);
  }
  EXPECT_EQ(t.steps.back().round, 3u);
}

TEST(Classical, IllegalMoveThrows) {
  const Digraph p3 = Digraph::path(3);
  EXPECT_THROW(play(GameModel::kClassical, p3, scripted_classical(Player::kCop, Vertex{0}, {2}),
                    scripted_classical(Player::kRobber, Vertex{2}, {}), 1),
               std::invalid_argument);
  EXPECT_THROW(play(GameModel::kClassical, p3, scripted_classical(Player::kCop, Vertex{0}, {}),
                    scripted_classical(Player::kRobber, Vertex{2}, {}), 0),
               std::invalid_argument);
}

TEST(Classical, PlacementSeesCop) {
  const Digraph p3 = Digraph::path(3);
  const Strategy robber{"away", VertexPlacement([](Vertex c) { return 2 - c; }),
                        VertexPolicy([](const ClassicalView& v) { return v.robber; })};
  const GameTrace t = play(GameModel::kClassical, p3,
                           scripted_classical(Player::kCop, Vertex{0}, {}), robber, 1);
  EXPECT_EQ(std::get<Positions>(t.steps[0].state).robber, 2u);
}

TEST(Probabilistic, OverlapFormula) {
  RealVector r(3), c(3);
  r << 0.5, 0.25, 0.25;
  c << 0.2, 0.2, 0.6;
  EXPECT_NEAR(p_copwin_probabilistic(r, c), 0.1 + 0.05 + 0.15, 1e-15);
  RealVector bad(3);
  bad << 0.5, 0.5, 0.5;
  EXPECT_THROW(p_copwin_probabilistic(bad, c), std::invalid_argument);
}

TEST(Probabilistic, UniformCopGivesOneOverN) {
  Rng rng(21);
  for (int i = 0; i < 10; ++i) {
    const Digraph g = random_connected_graph(2 + i, 0.3, rng);
    std::vector<GraphStochastic> moves;
    for (int k = 0; k < 3; ++k) moves.push_back(sample_graph_stochastic(g, rng));
    const GameTrace t =
        play(GameModel::kOpenProbabilistic, g, uniform_spread(g, GameModel::kOpenProbabilistic),
             scripted_stochastic(g, random_distribution(g.size(), rng), moves), 4);
    EXPECT_NEAR(t.p_copwin, 1.0 / static_cast<double>(g.size()), kTau);
  }
}

TEST(Quantum, SeparableEqualsJointForProducts) {
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i) % 5;
    const QuantumState r(random_amplitudes(n, rng));
    const QuantumState c(random_amplitudes(n, rng));
    double direct = 0.0;
    for (std::size_t v = 0; v < n; ++v) direct += std::norm(r[v]) * std::norm(c[v]);
    EXPECT_NEAR(p_copwin_separable(r, c), direct, 1e-14);
    EXPECT_NEAR(p_copwin_joint(kron(r.amplitudes(), c.amplitudes())), direct, 1e-14);
  }
  EXPECT_THROW(p_copwin_joint(ComplexVector::Ones(5) / std::sqrt(5.0)), std::invalid_argument);
}

TEST(Quantum, CaptureExamples) {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = h;  // |00>
  bell(3) = h;  // |11>
  EXPECT_NEAR(p_copwin_joint(bell), 1.0, kTau);
  ComplexVector apart = ComplexVector::Zero(16);
  apart(0 * 4 + 2) = h;
  apart(1 * 4 + 3) = h;
  EXPECT_NEAR(p_copwin_joint(apart), 0.0, kTau);
  const QuantumState plus(ComplexVector::Constant(2, h));
  EXPECT_NEAR(p_copwin_separable(plus, plus), 0.5, kTau);
}

TEST(Quantum, ControlledGameContainsLocalGame) {
  // Constant controlled moves reproduce the local game exactly.
  Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    const Digraph g = random_connected_graph(3 + static_cast<std::size_t>(i) % 4, 0.4, rng);
    const std::size_t rounds = 3;
    std::vector<GraphUnitary> cu, ru;
    std::vector<ControlledOp> cc, rc;
    for (std::size_t k = 0; k < rounds; ++k) {
      cu.push_back(sample_graph_unitary(g, rng));
      ru.push_back(sample_graph_unitary(g, rng));
      cc.push_back(ControlledOp::constant(Player::kRobber, cu.back()));
      rc.push_back(ControlledOp::constant(Player::kCop, ru.back()));
    }
    const QuantumState c0(random_amplitudes(g.size(), rng));
    const QuantumState r0(random_amplitudes(g.size(), rng));
    const GameTrace local = play(GameModel::kClassicalQuantum, g, scripted_unitary(g, c0, cu),
                                 scripted_unitary(g, r0, ru), rounds);
    const GameTrace joint =
        play(GameModel::kQuantumControlled, g, scripted_controlled(g, Player::kCop, c0, cc),
             scripted_controlled(g, Player::kRobber, r0, rc), rounds);
    ASSERT_NEAR(local.p_copwin, joint.p_copwin, 1e-12);
    ASSERT_EQ(local.steps.size(), joint.steps.size());
    for (std::size_t s = 0; s < local.steps.size(); ++s) {
      const ComplexVector a = joint_amplitudes(local.steps[s].state);
      const ComplexVector b = joint_amplitudes(joint.steps[s].state);
      ASSERT_LE((a - b).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Quantum, ClassicalGameEmbedsAsBasisStates) {
  const Digraph p4 = Digraph::path(4);
  const std::vector<Vertex> cop_walk{1, 2, 2}, robber_walk{3, 3};
  const GameTrace classical =
      play(GameModel::kClassical, p4, scripted_classical(Player::kCop, Vertex{0}, cop_walk),
           scripted_classical(Player::kRobber, Vertex{3}, robber_walk), 3);
  std::vector<GraphUnitary> cu, ru;
  Vertex at = 0;
  for (Vertex v : cop_walk) {
    cu.push_back(at == v ? GraphUnitary::identity(p4) : transposition_unitary(p4, at, v));
    at = v;
  }
  at = 3;
  for (Vertex v : robber_walk) {
    ru.push_back(at == v ? GraphUnitary::identity(p4) : transposition_unitary(p4, at, v));
    at = v;
  }
  const GameTrace quantum =
      play(GameModel::kClassicalQuantum, p4, scripted_unitary(p4, QuantumState::basis(4, 0), cu),
           scripted_unitary(p4, QuantumState::basis(4, 3), ru), 3);
  EXPECT_EQ(classical.p_copwin, 0.0);
  EXPECT_NEAR(quantum.p_copwin, classical.p_copwin, kTau);
}

TEST(Probabilistic, ClassicalGameEmbedsAsPointMasses) {
  const Digraph p4 = Digraph::path(4);
  const auto step = [&](Vertex from, Vertex to) {
    return GraphStochastic(transposition_unitary(p4, from, to).matrix().real(), p4);
  };
  const auto point = [](Vertex v) {
    RealVector e = RealVector::Zero(4);
    e(v) = 1.0;
    return e;
  };
  for (const std::vector<Vertex>& cop_walk :
       {std::vector<Vertex>{1, 2, 2}, std::vector<Vertex>{1, 2, 3}}) {
    const std::vector<Vertex> robber_walk{3, 3};
    const GameTrace classical =
        play(GameModel::kClassical, p4, scripted_classical(Player::kCop, Vertex{0}, cop_walk),
             scripted_classical(Player::kRobber, Vertex{3}, robber_walk), 3);
    std::vector<GraphStochastic> cm, rm;
    Vertex at = 0;
    for (Vertex v : cop_walk) {
      cm.push_back(step(at, v));
      at = v;
    }
    at = 3;
    for (Vertex v : robber_walk) {
      rm.push_back(step(at, v));
      at = v;
    }
    const GameTrace prob = play(GameModel::kOpenProbabilistic, p4, scripted_stochastic(p4, point(0), cm),
                                scripted_stochastic(p4, point(3), rm), 3);
    EXPECT_NEAR(prob.p_copwin, classical.p_copwin, kTau);
  }
}

TEST(Quantum, WrongGraphOrRegisterIsRejected) {
  const Digraph p3 = Digraph::path(3);
  const Digraph k3 = Digraph::complete(3);
  const auto e0 = QuantumState::basis(3, 0);
  EXPECT_THROW(play(GameModel::kClassicalQuantum, p3,
                    scripted_unitary(k3, e0, {GraphUnitary::identity(k3)}),
                    scripted_unitary(p3, e0, {}), 1),
               std::invalid_argument);
  const ControlledOp wrong = ControlledOp::constant(Player::kCop, GraphUnitary::identity(p3));
  EXPECT_THROW(play(GameModel::kQuantumControlled, p3, scripted_controlled(p3, Player::kCop, e0, {wrong}),
                    scripted_controlled(p3, Player::kRobber, e0, {}), 1),
               std::invalid_argument);
  EXPECT_THROW(play(GameModel::kClassicalQuantum, p3, uniform_spread(p3, GameModel::kOpenProbabilistic),
                    scripted_unitary(p3, e0, {}), 1),
               std::invalid_argument);
}

TEST(Quantum, RotationRelabelingPreservesCaptureOnC4) {
  Rng rng(24);
  const Digraph c4 = Digraph::cycle(4);
  for (int i = 0; i < 10; ++i) {
    std::vector<ControlledOp> cops, robbers;
    for (int k = 0; k < 3; ++k) {
      cops.push_back(random_controlled_op(c4, Player::kRobber, rng));
      robbers.push_back(random_controlled_op(c4, Player::kCop, rng));
    }
    const ComplexVector c0 = random_amplitudes(4, rng);
    const ComplexVector r0 = random_amplitudes(4, rng);
    const double base =
        play(GameModel::kQuantumControlled, c4, scripted_controlled(c4, Player::kCop, QuantumState(c0), cops),
             scripted_controlled(c4, Player::kRobber, QuantumState(r0), robbers), 3)
            .p_copwin;
    for (std::size_t s = 1; s < 4; ++s) {
      const auto perm = rotation(4, s);
      const auto rotate_op = [&](const ControlledOp& op) {
        std::vector<GraphUnitary> blocks(4, GraphUnitary::identity(c4));
        for (Vertex v = 0; v < 4; ++v) blocks[perm[v]] = relabel(op.block(v), perm);
        return ControlledOp(op.control(), blocks);
      };
      const auto rotate_state = [&](const ComplexVector& x) {
        ComplexVector y(4);
        for (Vertex v = 0; v < 4; ++v) y(static_cast<Eigen::Index>(perm[v])) = x(static_cast<Eigen::Index>(v));
        return QuantumState(y);
      };
      std::vector<ControlledOp> rc, rr;
      for (const auto& op : cops) rc.push_back(rotate_op(op));
      for (const auto& op : robbers) rr.push_back(rotate_op(op));
      const double rotated =
          play(GameModel::kQuantumControlled, c4, scripted_controlled(c4, Player::kCop, rotate_state(c0), rc),
               scripted_controlled(c4, Player::kRobber, rotate_state(r0), rr), 3)
              .p_copwin;
      EXPECT_NEAR(rotated, base, 1e-12);
    }
  }
}

TEST(Quantum, EntanglerOpening) {
  // Robber entangled to sit on the Cop's vertex: certain capture at t = 1.
  const Digraph c4 = Digraph::cycle(4);
  Entangler same;
  for (Vertex v = 0; v < 4; ++v) same.chi.push_back(QuantumState::basis(4, v));
  const GameTrace t =
      play(GameModel::kQuantumControlled, c4, uniform_spread(c4, GameModel::kQuantumControlled),
           scripted_controlled(c4, Player::kRobber, same, {}), 1);
  EXPECT_NEAR(t.p_copwin, 1.0, kTau);
}

TEST(Sweep, RequiresDominatingSet) {
  EXPECT_THROW(DominatingSweep(Digraph::cycle(5), {0}), std::invalid_argument);
  EXPECT_THROW(DominatingSweep(Digraph::directed_cycle(3), {0, 1}), std::invalid_argument);
  EXPECT_NO_THROW(DominatingSweep(Digraph::cycle(5), {0, 2}));
}

TEST(Sweep, UniversalVertexCatchesInOneRound) {
  const Digraph s = Digraph::star(4);
  for (Vertex r = 0; r < s.size(); ++r) {
    const EvaderPolicy stay{[r](const RealVector&) { return r; },
                            [](const SweepView& v) { return v.robber; }};
    EXPECT_NEAR(play_unfair_probabilistic(s, {0}, stay, 1).capture_probability, 1.0, kTau);
  }
}

TEST(Sweep, ZeroRoundsCaptureNothing) {
  const EvaderPolicy stay{[](const RealVector&) { return Vertex{0}; },
                          [](const SweepView& v) { return v.robber; }};
  EXPECT_EQ(play_unfair_probabilistic(Digraph::cycle(5), {0, 2}, stay, 0).capture_probability, 0.0);
}

TEST(Sweep, IllegalRobberMoveThrows) {
  const EvaderPolicy jump{[](const RealVector&) { return Vertex{0}; },
                          [](const SweepView&) { return Vertex{2}; }};
  EXPECT_THROW(play_unfair_probabilistic(Digraph::cycle(5), {0, 2}, jump, 3), std::invalid_argument);
}

}  // namespace
}  // namespace copgame
