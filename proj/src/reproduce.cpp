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

#include "copgame/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

#include "copgame/io.hpp"
#include "copgame/sampling.hpp"
#include "copgame/strategies.hpp"

namespace copgame {

namespace {

std::string fmt(const char* pattern, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

CaseReport uniform_case(Rng& rng) {
  const Digraph g = Digraph::complete(5);
  const std::size_t rounds = 3;
  std::vector<GraphStochastic> stoch;
  std::vector<GraphUnitary> unit;
  for (std::size_t i = 0; i < rounds; ++i) {
    stoch.push_back(sample_graph_stochastic(g, rng));
    unit.push_back(sample_graph_unitary(g, rng));
  }
  const double p_prob =
      play(GameModel::kOpenProbabilistic, g, uniform_spread(g, GameModel::kOpenProbabilistic),
           scripted_stochastic(g, random_distribution(5, rng), stoch), rounds)
          .p_copwin;
  const double p_quantum =
      play(GameModel::kClassicalQuantum, g, uniform_spread(g, GameModel::kClassicalQuantum),
           scripted_unitary(g, QuantumState(random_amplitudes(5, rng)), unit), rounds)
          .p_copwin;
  const double worst = std::abs(p_prob - 0.2) > std::abs(p_quantum - 0.2) ? p_prob : p_quantum;
  return {"uniform-1-over-n", format_probability(0.2), worst, std::abs(worst - 0.2) <= kTolerance,
          "K5 open_probabilistic=" + format_probability(p_prob) +
              " classical_quantum=" + format_probability(p_quantum)};
}

CaseReport universal_case(Rng& rng) {
  const Digraph g = Digraph::star(3);
  const Strategy robber = scripted_controlled(g, Player::kRobber,
                                              QuantumState(random_amplitudes(4, rng)), {});
  const double p = play(GameModel::kQuantumControlled, g, universal_vertex_catch(g), robber, 1).p_copwin;
  return {"universal-vertex-1", format_probability(1.0), p, std::abs(p - 1.0) <= kTolerance,
          "star S3, random robber state, one round"};
}

CaseReport evasion_case(Rng& rng) {
  const Digraph g = Digraph::cycle(4);
  const std::size_t rounds = 10;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ControlledOp> ops;
    for (std::size_t i = 0; i < rounds; ++i) ops.push_back(random_controlled_op(g, Player::kRobber, rng));
    const Strategy cop =
        scripted_controlled(g, Player::kCop, QuantumState(random_amplitudes(4, rng)), ops);
    const GameTrace t =
        play(GameModel::kQuantumControlled, g, cop, c4_antipodal_evasion(g, cop), rounds);
    for (const auto& step : t.steps) {
      if (step.mover == Player::kCop) worst = std::max(worst, p_copwin_joint(joint_amplitudes(step.state)));
    }
  }
  return {"c4-evasion-0", "<= 1e-12", worst, worst <= 1e-12,
          "50 random controlled cop strategies, every t <= 10"};
}

CaseReport unfair_case(Rng& rng) {
  const Digraph g = Digraph::cycle(4);
  const Strategy robber = scripted_controlled(g, Player::kRobber,
                                              QuantumState(random_amplitudes(4, rng)), {});
  const double p = play(GameModel::kQuantumControlled, g, c4_unfair_cop(g), robber, 1).p_copwin;
  return {"c4-unfair-3-4", format_probability(0.75), p, std::abs(p - 0.75) <= kTolerance,
          "C4, random local robber state"};
}

CaseReport sweep_case(Rng& rng) {
  const Digraph g = Digraph::cycle(5);
  const DominatingSweep sweep = dominating_set_sweep(g, {0, 2});
  const std::size_t rounds = 3;
  const SweepSearch search = adversarial_sweep_search(sweep, rounds, 6, 200000, rng);
  const double bound = 1.0 - std::pow(0.5, static_cast<double>(rounds));
  return {"theorem1-sweep", fmt(">= %.9f", bound), search.worst,
          search.worst >= bound - kTolerance,
          "C5, D={0,2}, k=3, " + std::to_string(search.walks) + " robber walks, first " +
              std::to_string(search.depth) + " moves exhaustive"};
}

CaseReport star_case(Rng& rng) {
  double product = 0.0;
  double slack = -1.0;
  std::vector<ComplexVector> phis;
  for (int i = 0; i < 100; ++i) phis.push_back(random_amplitudes(3, rng));
  for (int i = 0; i < 1000; ++i) {
    const ComplexMatrix u = sample_p3_unitary(rng).matrix();
    product = std::max(product, std::abs(u(1, 0)) * std::abs(u(1, 2)));
    for (const auto& phi : phis) {
      const double gathered = std::norm((u * phi)(1));
      const double cap = 1.0 - std::min(std::norm(phi(0)), std::norm(phi(2)));
      slack = std::max(slack, gathered - cap);
    }
  }
  return {"star-impossibility", "<= 1e-8", product,
          product <= kInequalityTolerance && slack <= kInequalityTolerance,
          "1000 sampled P3 unitaries; max |<1|U phi>|^2 - (1 - min(|phi_0|^2,|phi_2|^2)) = " +
              fmt("%.3e", slack)};
}

CaseReport reach_case(Rng& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::uniform_real_distribution<double> density(0.0, 0.4);
  double min_fidelity = 1.0;
  bool ok = true;
  std::size_t longest = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = size(rng);
    const Digraph g = random_reach_graph(n, density(rng), rng);
    const QuantumState phi(random_amplitudes(n, rng));
    const QuantumState psi(random_amplitudes(n, rng));
    const Vertex root = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    const auto seq = reach_sequence(g, phi, psi, root);
    ok = ok && seq.size() <= 2 * n - 2;
    for (const auto& u : seq) ok = ok && is_graph_preserving_unitary(u.matrix(), g).ok();
    min_fidelity = std::min(min_fidelity, compose_apply(seq, phi).fidelity(psi));
    longest = std::max(longest, seq.size());
  }
  ok = ok && min_fidelity >= 1.0 - kTolerance;
  return {"reach-bound", fmt(">= %.9f", 1.0 - kTolerance), min_fidelity, ok,
          "200 random instances, n <= 12, all lengths <= 2n-2, longest " + std::to_string(longest)};
}

}  // namespace

const std::vector<std::string>& reproduce_cases() {
  static const std::vector<std::string> names = {
      "uniform-1-over-n", "universal-vertex-1", "c4-evasion-0", "c4-unfair-3-4",
      "theorem1-sweep",   "star-impossibility", "reach-bound"};
  return names;
}

CaseReport reproduce_case(std::string_view name, std::uint64_t seed) {
  Rng rng(seed);
  if (name == "uniform-1-over-n") return uniform_case(rng);
  if (name == "universal-vertex-1") return universal_case(rng);
  if (name == "c4-evasion-0") return evasion_case(rng);
  if (name == "c4-unfair-3-4") return unfair_case(rng);
  if (name == "theorem1-sweep") return sweep_case(rng);
  if (name == "star-impossibility") return star_case(rng);
  if (name == "reach-bound") return reach_case(rng);
  throw std::invalid_argument("unknown case '" + std::string(name) + "'");
}

EvaderPolicy walk_evader(std::vector<Vertex> walk) {
  if (walk.empty()) throw std::invalid_argument("walk needs a start vertex");
  auto w = std::make_shared<const std::vector<Vertex>>(std::move(walk));
  return {[w](const RealVector&) { return w->front(); },
          [w](const SweepView& view) { return view.step < w->size() ? (*w)[view.step] : view.robber; }};
}

SweepSearch adversarial_sweep_search(const DominatingSweep& sweep, std::size_t rounds,
                                     std::size_t depth, std::size_t walk_cap, Rng& rng) {
  const Digraph& g = sweep.graph();
  const std::size_t n = g.size();
  const std::size_t m = sweep.set().size();
  std::size_t longest = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) longest = std::max(longest, sweep.route(i, j).size() - 1);
  }
  // Robber moves that can matter: one before every Cop step after the first.
  const std::size_t moves = rounds == 0 ? 0 : (rounds - 1) * (longest + 1);
  depth = std::min(depth, moves);

  // Number of walks with d moves, summed over start vertices.
  const auto walk_count = [&](std::size_t d) {
    std::vector<double> count(n, 1.0);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<double> next(n, 0.0);
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : neighbors(g, v)) next[v] += count[w];
      }
      count = std::move(next);
    }
    double total = 0.0;
    for (double c : count) total += c;
    return total;
  };
  while (depth > 0 && walk_count(depth) > static_cast<double>(walk_cap)) --depth;

  SweepSearch out;
  out.depth = depth;
  out.exhaustive = depth == moves;
  const auto evaluate = [&](const std::vector<Vertex>& walk) {
    const double p = play_unfair_probabilistic(sweep, walk_evader(walk), rounds).capture_probability;
    ++out.walks;
    if (out.worst_walk.empty() || p < out.worst) {
      out.worst = p;
      out.worst_walk = walk;
    }
  };

  std::vector<Vertex> walk;
  const auto dfs = [&](auto&& self) -> void {
    if (walk.size() == depth + 1) {
      evaluate(walk);
      return;
    }
    for (Vertex w : neighbors(g, walk.back())) {
      walk.push_back(w);
      self(self);
      walk.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    walk = {v};
    dfs(dfs);
  }
  if (!out.exhaustive) {
    std::uniform_int_distribution<Vertex> start(0, n - 1);
    for (std::size_t i = 0; i < walk_cap; ++i) {
      walk = {start(rng)};
      for (std::size_t d = 0; d < moves; ++d) {
        const VertexSet nb = neighbors(g, walk.back());
        walk.push_back(nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)]);
      }
      evaluate(walk);
    }
  }
  return out;
}

}  // namespace copgame
