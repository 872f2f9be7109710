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
 * Reflexive digraphs and the classical analysis the games need: corners,
 * dismantling, the backward-induction game solver, dominating sets and
 * spanning trees.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace copgame {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;  // always sorted ascending
using Arc = std::pair<Vertex, Vertex>;

/// Directed graph on the dense vertex set {0, ..., n-1}, stored as a boolean
/// adjacency matrix. Arc (u, v) means a player at u may move to v.
class Digraph {
 public:
  Digraph() = default;

  /// Builds a graph from an arc list. With `undirected` every listed pair is
  /// inserted in both directions; with `reflexive` every loop is inserted.
  /// Throws std::out_of_range if an arc names a vertex >= n.
  Digraph(std::size_t n, std::span<const Arc> arcs, bool undirected = false,
          bool reflexive = false);

  std::size_t size() const { return n_; }
  bool has_arc(Vertex from, Vertex to) const;
  std::size_t arc_count() const;
  std::vector<Arc> arcs() const;

  bool is_reflexive() const;
  bool is_undirected() const;

  /// Subgraph of the symmetric arcs (both (u,v) and (v,u) present).
  Digraph symmetric_part() const;
  Digraph reversed() const;

  /// Graph whose vertex perm[v] carries the arcs of v.
  Digraph relabeled(std::span<const Vertex> perm) const;

  /// Subgraph induced on `keep`, relabeled to 0..keep.size()-1 in order.
  Digraph induced(std::span<const Vertex> keep) const;

  bool operator==(const Digraph&) const = default;

  // Reflexive families. Vertex labels follow the usual drawings: the path runs
  // 0-1-...-(n-1), the cycle closes (n-1)-0, the star's center is 0.
  static Digraph path(std::size_t n);
  static Digraph cycle(std::size_t n);
  static Digraph directed_cycle(std::size_t n);
  static Digraph star(std::size_t leaves);
  static Digraph complete(std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<char> adj_;  // row-major, adj_[from * n + to]
};

/// Out-neighbourhood {w : (v,w) is an arc}; contains v on reflexive graphs.
VertexSet neighbors(const Digraph& g, Vertex v);

/// Strongly connected (a path between every ordered pair of vertices).
bool is_reversible(const Digraph& g);

/// Weakly connected through symmetric arcs only.
bool is_connected_undirected(const Digraph& g);

/// Returns the lowest-indexed u != v with S(v) a subset of S(u), if any.
/// Requires an undirected reflexive graph.
std::optional<Vertex> is_corner(const Digraph& g, Vertex v);

/// Corner-removal test. Dismantlability does not depend on the removal order,
/// so corners are removed greedily. Requires undirected, reflexive, connected.
bool is_copwin_dismantle(const Digraph& g);

inline constexpr std::size_t kDefaultSolverCap = 10;

/// Backward-induction solution of the classical one-cop game. Positions are
/// (cop, robber, side to move); the Cop places first, then the Robber, then
/// the Cop moves first in every round.
class PursuitTable {
 public:
  static constexpr int kLost = -1;

  /// Throws std::invalid_argument above `cap` vertices or on inputs that are
  /// not undirected, reflexive and connected.
  explicit PursuitTable(const Digraph& g, std::size_t cap = kDefaultSolverCap);

  bool cop_wins() const { return start_.has_value(); }
  std::optional<Vertex> cop_start() const { return start_; }

  /// Number of Cop moves needed to capture from (cop, robber) with the Cop to
  /// move, or kLost when the Robber escapes forever.
  int cop_to_move_rank(Vertex cop, Vertex robber) const;
  /// Same, with the Robber to move.
  int robber_to_move_rank(Vertex cop, Vertex robber) const;

  /// An optimal Cop move from a winning cop-to-move position (any legal move
  /// otherwise).
  Vertex best_cop_move(Vertex cop, Vertex robber) const;

  const Digraph& graph() const { return g_; }

 private:
  Digraph g_;
  std::vector<int> cop_rank_;
  std::vector<int> robber_rank_;
  std::vector<Vertex> cop_move_;
  std::optional<Vertex> start_;
};

/// True iff the Cop has a deterministic winning strategy.
bool solve_copwin_game(const Digraph& g, std::size_t cap = kDefaultSolverCap);

enum class DominatingMode { kGreedy, kExact };
inline constexpr std::size_t kExactDominatingCap = 10;

bool is_dominating(const Digraph& g, std::span<const Vertex> set);

/// Greedy max-coverage by default (ties to the lowest index). kExact returns
/// a minimum-size set and is limited to kExactDominatingCap vertices.
VertexSet dominating_set(const Digraph& g,
                         DominatingMode mode = DominatingMode::kGreedy);

/// Lowest-indexed vertex adjacent to every vertex, if any.
std::optional<Vertex> universal_vertex(const Digraph& g);

/// Breadth-first spanning tree over the symmetric arcs.
struct SpanningTree {
  Vertex root = 0;
  std::vector<Vertex> parent;    // parent[root] == root
  std::vector<std::size_t> depth;
  /// Vertices by non-increasing depth, ties by ascending index; order.back()
  /// is the root.
  std::vector<Vertex> order;

  /// The reflexive undirected graph formed by the tree edges.
  Digraph as_graph() const;
};

/// Throws std::invalid_argument when the symmetric arcs do not connect g.
SpanningTree spanning_tree(const Digraph& g, Vertex root);

/// k disjoint copies of g; copy j occupies vertices [j*n, (j+1)*n).
Digraph disjoint_union(const Digraph& g, std::size_t k);

/// Vertices reachable from v along at most k arcs.
VertexSet support_ball(const Digraph& g, Vertex v, std::size_t k);

/// Unweighted distances along arcs from `source`; unreachable vertices get
/// SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Digraph& g, Vertex source);

/// A shortest path from `from` to `to` (inclusive of both ends), preferring
/// lower-indexed vertices on ties. Empty if unreachable.
std::vector<Vertex> shortest_path(const Digraph& g, Vertex from, Vertex to);

}  // namespace copgame
