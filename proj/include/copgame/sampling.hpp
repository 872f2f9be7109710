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

// Seeded generators for randomized checks.

#pragma once

#include "copgame/graph.hpp"
#include "copgame/linalg.hpp"
#include "copgame/quantum_ops.hpp"

namespace copgame {

/// Undirected reflexive graph: a uniformly random labelled tree plus each
/// remaining edge with probability `density`.
Digraph random_connected_graph(std::size_t n, double density, Rng& rng);

/// Reflexive digraph containing an undirected spanning tree, with extra
/// one-way arcs (probability `density` per ordered pair). Always reversible.
Digraph random_reach_graph(std::size_t n, double density, Rng& rng);

/// random_connected_graph with one random vertex joined to all others.
Digraph random_graph_with_universal_vertex(std::size_t n, double density, Rng& rng);

/// Column-stochastic matrix whose column v is a random distribution over
/// the out-neighbourhood of v.
GraphStochastic sample_graph_stochastic(const Digraph& g, Rng& rng);

/// Random member of U_{C4}: a clique-block sample, a phased rotation of the
/// cycle, or a rotated C4 gather with random parameters.
GraphUnitary random_c4_unitary(Rng& rng);

/// Independent random block per control vertex (random_c4_unitary on the
/// 4-cycle, sample_graph_unitary otherwise).
ControlledOp random_controlled_op(const Digraph& g, Player control, Rng& rng);

}  // namespace copgame
