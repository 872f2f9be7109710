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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace copgame {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::string who(Player p) { return std::string(to_string(p)) + " strategy"; }

template <typename T>
const T& expect_initial(const Strategy& s, Player p, const char* what) {
  const T* v = std::get_if<T>(&s.initial);
  if (!v) {
    throw std::invalid_argument(who(p) + " '" + s.name + "' needs " + what +
                                " as its initial state in this model");
  }
  return *v;
}

template <typename T>
const T& expect_policy(const Strategy& s, Player p, const char* what) {
  const T* v = std::get_if<T>(&s.moves);
  if (!v || !*v) {
    throw std::invalid_argument(who(p) + " '" + s.name + "' needs " + what +
                                " moves in this model");
  }
  return *v;
}

void check_same_graph(const Digraph& op_graph, const Digraph& g, Player p) {
  if (!(op_graph == g)) {
    throw std::invalid_argument(who(p) +
                                " produced an operation certified against another graph");
  }
}

void check_distribution(const RealVector& p, std::size_t n, const char* what) {
  if (static_cast<std::size_t>(p.size()) != n) {
    throw std::invalid_argument(std::string(what) + " has the wrong dimension");
  }
  if (p.size() > 0 && p.minCoeff() < -kTolerance) {
    throw std::invalid_argument(std::string(what) + " has a negative entry");
  }
  if (std::abs(p.sum() - 1.0) > kTolerance) {
    throw std::invalid_argument(std::string(what) + " does not sum to 1");
  }
}

void check_normalized(const ComplexVector& v) {
  if (std::abs(v.norm() - 1.0) > kTolerance) {
    throw std::logic_error("game state lost normalization");
  }
}

GameTrace play_classical(const Digraph& g, const Strategy& cop, const Strategy& robber,
                         std::size_t rounds) {
  GameTrace trace;
  Positions pos{};
  pos.cop = expect_initial<Vertex>(cop, Player::kCop, "a vertex");
  if (pos.cop >= g.size()) throw std::out_of_range("cop start vertex out of range");
  if (const auto* place = std::get_if<VertexPlacement>(&robber.initial)) {
    pos.robber = (*place)(pos.cop);
  } else {
    pos.robber = expect_initial<Vertex>(robber, Player::kRobber, "a vertex");
  }
  if (pos.robber >= g.size()) throw std::out_of_range("robber start vertex out of range");
  const auto& cop_move = expect_policy<VertexPolicy>(cop, Player::kCop, "vertex");
  const auto& robber_move = expect_policy<VertexPolicy>(robber, Player::kRobber, "vertex");

  const auto step = [&](Vertex from, Vertex to, Player p) {
    if (to >= g.size() || !g.has_arc(from, to)) {
      throw std::invalid_argument(who(p) + " made an illegal move " + std::to_string(from) +
                                  " -> " + std::to_string(to));
    }
    return to;
  };

  trace.steps.push_back({0, std::nullopt, pos});
  if (pos.cop == pos.robber) trace.capture_round = 0;
  for (std::size_t round = 1; round <= rounds; ++round) {
    pos.cop = step(pos.cop, cop_move({round, pos.cop, pos.robber}), Player::kCop);
    trace.steps.push_back({round, Player::kCop, pos});
    if (pos.cop == pos.robber && !trace.capture_round) trace.capture_round = round;
    if (round == rounds) break;
    pos.robber = step(pos.robber, robber_move({round, pos.cop, pos.robber}), Player::kRobber);
    trace.steps.push_back({round, Player::kRobber, pos});
  }
  trace.p_copwin = pos.cop == pos.robber ? 1.0 : 0.0;
  return trace;
}

GameTrace play_probabilistic(const Digraph& g, const Strategy& cop, const Strategy& robber,
                             std::size_t rounds) {
  GameTrace trace;
  Distributions d;
  d.cop = expect_initial<RealVector>(cop, Player::kCop, "a probability vector");
  d.robber = expect_initial<RealVector>(robber, Player::kRobber, "a probability vector");
  check_distribution(d.cop, g.size(), "cop start");
  check_distribution(d.robber, g.size(), "robber start");
  const auto& cop_move = expect_policy<StochasticPolicy>(cop, Player::kCop, "stochastic");
  const auto& robber_move =
      expect_policy<StochasticPolicy>(robber, Player::kRobber, "stochastic");

  trace.steps.push_back({0, std::nullopt, d});
  for (std::size_t round = 1; round <= rounds; ++round) {
    const GraphStochastic mc = cop_move({round, d.cop, d.robber});
    check_same_graph(mc.graph(), g, Player::kCop);
    d.cop = mc.apply(d.cop);
    trace.steps.push_back({round, Player::kCop, d});
    if (round == rounds) break;
    const GraphStochastic mr = robber_move({round, d.cop, d.robber});
    check_same_graph(mr.graph(), g, Player::kRobber);
    d.robber = mr.apply(d.robber);
    trace.steps.push_back({round, Player::kRobber, d});
  }
  trace.p_copwin = p_copwin_probabilistic(d.robber, d.cop);
  return trace;
}

GameTrace play_classical_quantum(const Digraph& g, const Strategy& cop,
                                 const Strategy& robber, std::size_t rounds) {
  GameTrace trace;
  QuantumState c = expect_initial<QuantumState>(cop, Player::kCop, "a quantum state");
  QuantumState r = expect_initial<QuantumState>(robber, Player::kRobber, "a quantum state");
  if (c.dim() != g.size() || r.dim() != g.size()) {
    throw std::invalid_argument("initial state dimension does not match the graph");
  }
  const auto& cop_move = expect_policy<UnitaryPolicy>(cop, Player::kCop, "unitary");
  const auto& robber_move = expect_policy<UnitaryPolicy>(robber, Player::kRobber, "unitary");
  const auto snapshot = [&] { return LocalStates{c.amplitudes(), r.amplitudes()}; };

  trace.steps.push_back({0, std::nullopt, snapshot()});
  for (std::size_t round = 1; round <= rounds; ++round) {
    const GraphUnitary uc = cop_move({round, c, r});
    check_same_graph(uc.graph(), g, Player::kCop);
    c = uc.apply(c);
    trace.steps.push_back({round, Player::kCop, snapshot()});
    if (round == rounds) break;
    const GraphUnitary ur = robber_move({round, c, r});
    check_same_graph(ur.graph(), g, Player::kRobber);
    r = ur.apply(r);
    trace.steps.push_back({round, Player::kRobber, snapshot()});
  }
  trace.p_copwin = p_copwin_separable(r, c);
  return trace;
}

GameTrace play_quantum_controlled(const Digraph& g, const Strategy& cop,
                                  const Strategy& robber, std::size_t rounds) {
  GameTrace trace;
  const std::size_t n = g.size();
  const QuantumState& c0 = expect_initial<QuantumState>(cop, Player::kCop, "a quantum state");
  if (c0.dim() != n) throw std::invalid_argument("cop start dimension does not match the graph");

  ComplexVector joint = ComplexVector::Zero(idx(n * n));
  if (const auto* ent = std::get_if<Entangler>(&robber.initial)) {
    if (ent->chi.size() != n) {
      throw std::invalid_argument("robber entangler needs one state per cop vertex");
    }
    for (std::size_t v = 0; v < n; ++v) {
      const QuantumState& chi = ent->chi[v];
      if (chi.dim() != n) throw std::invalid_argument("entangler state has the wrong dimension");
      for (std::size_t r = 0; r < n; ++r) joint(idx(r * n + v)) = chi[r] * c0[v];
    }
  } else {
    const QuantumState& r0 =
        expect_initial<QuantumState>(robber, Player::kRobber, "a quantum state or entangler");
    if (r0.dim() != n) throw std::invalid_argument("robber start dimension does not match the graph");
    joint = kron(r0.amplitudes(), c0.amplitudes());
  }
  check_normalized(joint);
  const auto& cop_move = expect_policy<ControlledPolicy>(cop, Player::kCop, "controlled");
  const auto& robber_move =
      expect_policy<ControlledPolicy>(robber, Player::kRobber, "controlled");

  const auto apply = [&](const ControlledOp& op, Player p) {
    check_same_graph(op.graph(), g, p);
    if (op.target() != p) {
      throw std::invalid_argument(who(p) + " must act on its own register, controlled by the "
                                  "opponent's");
    }
    joint = op.apply(joint);
    check_normalized(joint);
  };

  trace.steps.push_back({0, std::nullopt, JointState{joint}});
  for (std::size_t round = 1; round <= rounds; ++round) {
    apply(cop_move(round), Player::kCop);
    trace.steps.push_back({round, Player::kCop, JointState{joint}});
    if (round == rounds) break;
    apply(robber_move(round), Player::kRobber);
    trace.steps.push_back({round, Player::kRobber, JointState{joint}});
  }
  trace.p_copwin = p_copwin_joint(joint);
  return trace;
}

}  // namespace

const char* to_string(GameModel m) {
  switch (m) {
    case GameModel::kClassical:
      return "classical";
    case GameModel::kOpenProbabilistic:
      return "open_probabilistic";
    case GameModel::kClassicalQuantum:
      return "classical_quantum";
    case GameModel::kQuantumControlled:
      return "quantum_controlled";
  }
  return "unknown";
}

GameModel parse_game_model(std::string_view name) {
  for (auto m : {GameModel::kClassical, GameModel::kOpenProbabilistic,
                 GameModel::kClassicalQuantum, GameModel::kQuantumControlled}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown game model '" + std::string(name) + "'");
}

ComplexVector joint_amplitudes(const GameState& s) {
  if (const auto* j = std::get_if<JointState>(&s)) return j->amps;
  if (const auto* l = std::get_if<LocalStates>(&s)) return kron(l->robber, l->cop);
  throw std::invalid_argument("step has no quantum state");
}

GameTrace play(GameModel model, const Digraph& g, const Strategy& cop,
               const Strategy& robber, std::size_t rounds) {
  if (rounds == 0) throw std::invalid_argument("a game needs at least one round");
  if (g.size() == 0) throw std::invalid_argument("a game needs a non-empty graph");
  GameTrace trace;
  switch (model) {
    case GameModel::kClassical:
      trace = play_classical(g, cop, robber, rounds);
      break;
    case GameModel::kOpenProbabilistic:
      trace = play_probabilistic(g, cop, robber, rounds);
      break;
    case GameModel::kClassicalQuantum:
      trace = play_classical_quantum(g, cop, robber, rounds);
      break;
    case GameModel::kQuantumControlled:
      trace = play_quantum_controlled(g, cop, robber, rounds);
      break;
  }
  trace.model = model;
  trace.rounds = rounds;
  return trace;
}

double p_copwin_joint(const ComplexVector& joint) {
  const auto dim = static_cast<std::size_t>(joint.size());
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim))));
  if (n * n != dim) {
    throw std::invalid_argument("joint state dimension " + std::to_string(dim) +
                                " is not a perfect square");
  }
  double p = 0.0;
  for (std::size_t v = 0; v < n; ++v) p += std::norm(joint(idx(v * n + v)));
  return p;
}

double p_copwin_joint(const QuantumState& joint) { return p_copwin_joint(joint.amplitudes()); }

double p_copwin_separable(const QuantumState& robber, const QuantumState& cop) {
  if (robber.dim() != cop.dim()) throw std::invalid_argument("state dimension mismatch");
  double p = 0.0;
  for (std::size_t v = 0; v < robber.dim(); ++v) p += std::norm(robber[v] * cop[v]);
  return p;
}

double p_copwin_probabilistic(const RealVector& robber, const RealVector& cop) {
  if (robber.size() != cop.size()) throw std::invalid_argument("distribution dimension mismatch");
  check_distribution(robber, static_cast<std::size_t>(robber.size()), "robber distribution");
  check_distribution(cop, static_cast<std::size_t>(cop.size()), "cop distribution");
  return robber.dot(cop);
}

DominatingSweep::DominatingSweep(const Digraph& g, VertexSet set) : g_(g), set_(std::move(set)) {
  if (!g.is_undirected() || !g.is_reflexive() || !is_connected_undirected(g)) {
    throw std::invalid_argument("dominating sweep needs an undirected, reflexive, connected graph");
  }
  std::sort(set_.begin(), set_.end());
  set_.erase(std::unique(set_.begin(), set_.end()), set_.end());
  if (set_.empty() || !is_dominating(g, set_)) {
    throw std::invalid_argument("vertex set does not dominate the graph");
  }
  for (Vertex from : set_) {
    for (Vertex to : set_) routes_.push_back(shortest_path(g, from, to));
  }
}

const std::vector<Vertex>& DominatingSweep::route(std::size_t from_index,
                                                  std::size_t to_index) const {
  return routes_.at(from_index * set_.size() + to_index);
}

SweepOutcome play_unfair_probabilistic(const DominatingSweep& sweep, const EvaderPolicy& robber,
                                       std::size_t rounds) {
  SweepOutcome out;
  if (rounds == 0) return out;
  const Digraph& g = sweep.graph();
  const VertexSet& dom = sweep.set();
  const std::size_t m = dom.size();

  struct Parcel {
    double mass;
    const std::vector<Vertex>* path;
    std::size_t at;
    std::size_t target;  // index into dom
    Vertex where() const { return (*path)[at]; }
  };
  std::vector<Parcel> parcels;
  for (std::size_t i = 0; i < m; ++i) parcels.push_back({1.0 / m, &sweep.route(i, i), 0, i});
  double following = 0.0;

  Vertex robber_at = 0;
  const auto cop_vector = [&] {
    RealVector p = RealVector::Zero(idx(g.size()));
    for (const auto& parcel : parcels) p(idx(parcel.where())) += parcel.mass;
    p(idx(robber_at)) += following;
    return p;
  };

  robber_at = robber.place(cop_vector());
  if (robber_at >= g.size()) throw std::out_of_range("robber start vertex out of range");

  bool first_step = true;
  const auto before_cop_step = [&] {
    if (!first_step) {
      const Vertex next = robber.move({out.cop_steps, robber_at, cop_vector()});
      if (next >= g.size() || !g.has_arc(robber_at, next)) {
        throw std::invalid_argument("robber made an illegal move " + std::to_string(robber_at) +
                                    " -> " + std::to_string(next));
      }
      robber_at = next;
    }
    first_step = false;
  };

  for (std::size_t round = 1; round <= rounds; ++round) {
    if (round > 1) {
      // Every parcel has arrived; pool per member, then split evenly.
      std::vector<double> pooled(m, 0.0);
      for (const auto& parcel : parcels) pooled[parcel.target] += parcel.mass;
      std::vector<Parcel> spread;
      std::size_t longest = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (pooled[i] == 0.0) continue;
        for (std::size_t j = 0; j < m; ++j) {
          const auto& path = sweep.route(i, j);
          spread.push_back({pooled[i] / m, &path, 0, j});
          longest = std::max(longest, path.size() - 1);
        }
      }
      parcels = std::move(spread);
      for (std::size_t s = 0; s < longest; ++s) {
        before_cop_step();
        for (auto& parcel : parcels) parcel.at = std::min(parcel.at + 1, parcel.path->size() - 1);
        ++out.cop_steps;
      }
    }
    // Catch: mass on a set member dominating the Robber steps onto him.
    before_cop_step();
    std::erase_if(parcels, [&](const Parcel& parcel) {
      if (!g.has_arc(parcel.where(), robber_at)) return false;
      following += parcel.mass;
      return true;
    });
    ++out.cop_steps;
    out.captured_after_round.push_back(following);
    out.robber_at_catch.push_back(robber_at);
  }
  out.capture_probability = following;
  return out;
}

SweepOutcome play_unfair_probabilistic(const Digraph& g, const VertexSet& dominating,
                                       const EvaderPolicy& robber, std::size_t rounds) {
  return play_unfair_probabilistic(DominatingSweep(g, dominating), robber, rounds);
}

}  // namespace copgame
