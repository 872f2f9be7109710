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

#include "copgame/graph.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "copgame/sampling.hpp"
#include "oracles.hpp"

namespace copgame {
namespace {

TEST(Digraph, ReflexiveAndUndirectedFlags) {
  const Digraph p = Digraph::path(3);
  EXPECT_TRUE(p.is_reflexive());
  EXPECT_TRUE(p.is_undirected());
  EXPECT_TRUE(p.has_arc(1, 1));
  EXPECT_FALSE(p.has_arc(0, 2));
  EXPECT_EQ(p.arc_count(), 3u + 4u);

  const Digraph d = Digraph::directed_cycle(4);
  EXPECT_TRUE(d.has_arc(3, 0));
  EXPECT_FALSE(d.has_arc(0, 3));
  EXPECT_FALSE(d.is_undirected());
}

TEST(Digraph, ArcOutOfRangeThrows) {
  const std::vector<Arc> arcs{{0, 3}};
  EXPECT_THROW(Digraph(3, arcs), std::out_of_range);
}

TEST(Digraph, RelabelAndInduced) {
  const Digraph p = Digraph::path(3);
  const std::vector<Vertex> perm{2, 0, 1};
  const Digraph q = p.relabeled(perm);
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(p.has_arc(u, v), q.has_arc(perm[u], perm[v]));
  }
  const std::vector<Vertex> keep{0, 2};
  const Digraph two = p.induced(keep);
  EXPECT_EQ(two.size(), 2u);
  EXPECT_FALSE(two.has_arc(0, 1));
}

TEST(Reversible, CycleAndPath) {
  EXPECT_TRUE(is_reversible(Digraph::directed_cycle(5)));
  const std::vector<Arc> one_way{{0, 1}, {1, 2}};
  EXPECT_FALSE(is_reversible(Digraph(3, one_way, false, true)));
}

TEST(Corner, PathEndpointsAndCycle) {
  const Digraph p4 = Digraph::path(4);
  EXPECT_EQ(is_corner(p4, 0), std::optional<Vertex>(1));
  EXPECT_EQ(is_corner(p4, 3), std::optional<Vertex>(2));
  EXPECT_FALSE(is_corner(p4, 1).has_value());
  for (Vertex v = 0; v < 4; ++v) EXPECT_FALSE(is_corner(Digraph::cycle(4), v).has_value());
}

TEST(Corner, CliqueVerticesAreCornersOfEachOther) {
  // Non-strict containment: in K3 every vertex is a corner.
  const Digraph k3 = Digraph::complete(3);
  for (Vertex v = 0; v < 3; ++v) EXPECT_TRUE(is_corner(k3, v).has_value());
}

TEST(Corner, MatchesDefinitionOnAllSmallGraphs) {
  for (std::size_t n = 2; n <= 5; ++n) {
    oracle::for_each_graph(n, [](const Digraph& g) {
      for (Vertex v = 0; v < g.size(); ++v) {
        const auto u = is_corner(g, v);
        ASSERT_EQ(u.has_value(), oracle::is_corner(g, v));
        if (u) {
          for (Vertex x : neighbors(g, v)) ASSERT_TRUE(g.has_arc(*u, x));
        }
      }
    });
  }
}

TEST(Copwin, KnownGraphs) {
  EXPECT_TRUE(is_copwin_dismantle(Digraph::path(4)));
  EXPECT_TRUE(solve_copwin_game(Digraph::path(4)));
  EXPECT_FALSE(is_copwin_dismantle(Digraph::cycle(4)));
  EXPECT_FALSE(solve_copwin_game(Digraph::cycle(4)));
  EXPECT_TRUE(is_copwin_dismantle(Digraph::cycle(3)));
  EXPECT_TRUE(is_copwin_dismantle(Digraph::star(5)));
  EXPECT_TRUE(is_copwin_dismantle(Digraph::complete(1)));
}

TEST(Copwin, DisconnectedThrows) {
  EXPECT_THROW(is_copwin_dismantle(Digraph(2, std::vector<Arc>{}, true, true)),
               std::invalid_argument);
}

TEST(Copwin, SolverCap) {
  EXPECT_THROW(solve_copwin_game(Digraph::path(11)), std::invalid_argument);
  EXPECT_NO_THROW(solve_copwin_game(Digraph::path(11), 11));
}

TEST(Copwin, DismantleSolverAndFixedPointAgreeUpToFive) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    oracle::for_each_graph(n, [&](const Digraph& g) {
      if (!oracle::connected(g)) return;
      const bool reference = oracle::copwin_fixed_point(g);
      ASSERT_EQ(is_copwin_dismantle(g), reference);
      ASSERT_EQ(solve_copwin_game(g), reference);
      ++checked;
    });
  }
  EXPECT_EQ(checked, 1u + 1u + 4u + 38u + 728u);  // connected labelled graphs
}

TEST(PursuitTable, WinningStartCatchesAnyRobber) {
  const Digraph g = Digraph::path(5);
  const PursuitTable t(g);
  ASSERT_TRUE(t.cop_wins());
  const Vertex start = *t.cop_start();
  for (Vertex r = 0; r < g.size(); ++r) {
    const int rank = t.cop_to_move_rank(start, r);
    ASSERT_GE(rank, 0);
    // Following best moves against the slowest escape shortens the rank.
    if (start != r) {
      const Vertex c = t.best_cop_move(start, r);
      EXPECT_TRUE(g.has_arc(start, c));
      EXPECT_LT(t.robber_to_move_rank(c, r), rank);
    }
  }
  EXPECT_EQ(PursuitTable(Digraph::cycle(4)).cop_to_move_rank(0, 2), PursuitTable::kLost);
}

TEST(Dominating, GreedyIsDominatingExactIsMinimum) {
  for (std::size_t n = 1; n <= 5; ++n) {
    oracle::for_each_graph(n, [](const Digraph& g) {
      const VertexSet greedy = dominating_set(g);
      ASSERT_TRUE(is_dominating(g, greedy));
      const VertexSet exact = dominating_set(g, DominatingMode::kExact);
      ASSERT_TRUE(is_dominating(g, exact));
      ASSERT_EQ(exact.size(), oracle::min_dominating_size(g));
      ASSERT_GE(greedy.size(), exact.size());
    });
  }
}

TEST(Dominating, ExactCap) {
  EXPECT_THROW(dominating_set(Digraph::path(11), DominatingMode::kExact), std::invalid_argument);
}

TEST(Dominating, StarAndUniversal) {
  EXPECT_EQ(dominating_set(Digraph::star(3)), VertexSet{0});
  EXPECT_EQ(universal_vertex(Digraph::star(3)), std::optional<Vertex>(0));
  EXPECT_FALSE(universal_vertex(Digraph::cycle(4)).has_value());
  EXPECT_EQ(universal_vertex(Digraph::complete(4)), std::optional<Vertex>(0));
}

TEST(SpanningTree, OrderInvariants) {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const Digraph g = random_reach_graph(n, 0.2, rng);
    const Vertex root = static_cast<Vertex>(trial) % n;
    const SpanningTree t = spanning_tree(g, root);
    ASSERT_EQ(t.parent[root], root);
    ASSERT_EQ(t.order.size(), n);
    ASSERT_EQ(t.order.back(), root);
    const auto dist = bfs_distances(g.symmetric_part(), root);
    for (Vertex v = 0; v < n; ++v) {
      ASSERT_EQ(t.depth[v], dist[v]);
      if (v != root) {
        ASSERT_TRUE(g.has_arc(v, t.parent[v]) && g.has_arc(t.parent[v], v));
        ASSERT_EQ(t.depth[t.parent[v]] + 1, t.depth[v]);
      }
    }
    for (std::size_t i = 1; i < n; ++i) {
      const Vertex a = t.order[i - 1], b = t.order[i];
      ASSERT_TRUE(t.depth[a] > t.depth[b] || (t.depth[a] == t.depth[b] && a < b));
    }
  }
}

TEST(SpanningTree, SmallExamples) {
  const SpanningTree c4 = spanning_tree(Digraph::cycle(4), 0);
  EXPECT_EQ(c4.order, (std::vector<Vertex>{2, 1, 3, 0}));
  EXPECT_EQ(c4.parent, (std::vector<Vertex>{0, 0, 1, 0}));
  EXPECT_EQ(spanning_tree(Digraph::path(3), 2).order, (std::vector<Vertex>{0, 1, 2}));
}

TEST(SpanningTree, DirectedCycleHasNoUndirectedTree) {
  EXPECT_THROW(spanning_tree(Digraph::directed_cycle(4), 0), std::invalid_argument);
}

TEST(DisjointUnion, CopiesAreIsolated) {
  const Digraph p = Digraph::path(3);
  const Digraph u = disjoint_union(p, 3);
  ASSERT_EQ(u.size(), 9u);
  for (Vertex a = 0; a < 9; ++a) {
    for (Vertex b = 0; b < 9; ++b) {
      const bool same = a / 3 == b / 3;
      EXPECT_EQ(u.has_arc(a, b), same && p.has_arc(a % 3, b % 3));
    }
  }
}

TEST(SupportBall, PathGrowsOneStepAtATime) {
  const Digraph p = Digraph::path(6);
  for (std::size_t k = 0; k < 7; ++k) {
    const VertexSet ball = support_ball(p, 0, k);
    EXPECT_EQ(ball.size(), std::min<std::size_t>(k + 1, 6));
  }
}

TEST(ShortestPath, LowestIndexTies) {
  const Digraph c4 = Digraph::cycle(4);
  EXPECT_EQ(shortest_path(c4, 0, 2), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(shortest_path(c4, 3, 3), (std::vector<Vertex>{3}));
  const auto d = bfs_distances(Digraph::directed_cycle(4), 1);
  EXPECT_EQ(d[0], 3u);
}

}  // namespace
}  // namespace copgame
