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

#include "copgame/sampling.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace copgame {

namespace {

std::vector<Arc> random_tree_edges(std::size_t n, Rng& rng) {
  // Random attachment over a shuffled labelling.
  std::vector<Vertex> label(n);
  for (Vertex v = 0; v < n; ++v) label[v] = v;
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Arc> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    edges.emplace_back(label[i], label[pick(rng)]);
  }
  return edges;
}

}  // namespace

Digraph random_connected_graph(std::size_t n, double density, Rng& rng) {
  std::bernoulli_distribution extra(density);
  auto edges = random_tree_edges(n, rng);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (extra(rng)) edges.emplace_back(u, v);
    }
  }
  return Digraph(n, edges, true, true);
}

Digraph random_reach_graph(std::size_t n, double density, Rng& rng) {
  std::bernoulli_distribution extra(density);
  std::vector<Arc> arcs;
  for (const auto& [u, v] : random_tree_edges(n, rng)) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && extra(rng)) arcs.emplace_back(u, v);
    }
  }
  return Digraph(n, arcs, false, true);
}

Digraph random_graph_with_universal_vertex(std::size_t n, double density, Rng& rng) {
  const Digraph base = random_connected_graph(n, density, rng);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  const Vertex hub = pick(rng);
  auto arcs = base.arcs();
  for (Vertex v = 0; v < n; ++v) arcs.emplace_back(hub, v);
  return Digraph(n, arcs, true, true);
}

GraphStochastic sample_graph_stochastic(const Digraph& g, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(g.size());
  RealMatrix m = RealMatrix::Zero(n, n);
  for (Vertex v = 0; v < g.size(); ++v) {
    const VertexSet out = neighbors(g, v);
    if (out.empty()) throw std::invalid_argument("vertex without out-arcs has no stochastic column");
    const RealVector p = random_distribution(out.size(), rng);
    for (std::size_t i = 0; i < out.size(); ++i) {
      m(static_cast<Eigen::Index>(out[i]), static_cast<Eigen::Index>(v)) = p(static_cast<Eigen::Index>(i));
    }
  }
  return GraphStochastic(std::move(m), g);
}

GraphUnitary random_c4_unitary(Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::size_t> shift(0, 3);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const Digraph c4 = Digraph::cycle(4);
  switch (kind(rng)) {
    case 0:
      return sample_graph_unitary(c4, rng, 2);
    case 1: {
      // Rotation by +-1 with phases; a step along the cycle in either direction.
      const std::size_t step = std::bernoulli_distribution(0.5)(rng) ? 1 : 3;
      ComplexMatrix m = ComplexMatrix::Zero(4, 4);
      for (Eigen::Index v = 0; v < 4; ++v) m((v + step) % 4, v) = std::polar(1.0, angle(rng));
      return GraphUnitary(std::move(m), c4);
    }
    default: {
      const ComplexVector dir = random_amplitudes(3, rng);
      const C4Amplitudes amps{std::abs(dir(0)), std::arg(dir(0)), std::abs(dir(1)),
                              std::arg(dir(1)), std::abs(dir(2)), std::arg(dir(2))};
      return relabel(gather_unitary_c4(amps, angle(rng), angle(rng)), rotation(4, shift(rng)));
    }
  }
}

ControlledOp random_controlled_op(const Digraph& g, Player control, Rng& rng) {
  const bool c4 = g == Digraph::cycle(4);
  std::vector<GraphUnitary> blocks;
  for (Vertex v = 0; v < g.size(); ++v) {
    blocks.push_back(c4 ? random_c4_unitary(rng) : sample_graph_unitary(g, rng));
  }
  return ControlledOp(control, std::move(blocks));
}

}  // namespace copgame
