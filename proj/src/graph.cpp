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

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace copgame {

namespace {

void check_vertex(const Digraph& g, Vertex v) {
  if (v >= g.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for graph of size " +
                            std::to_string(g.size()));
  }
}

void require_undirected_reflexive(const Digraph& g, const char* what) {
  if (!g.is_undirected() || !g.is_reflexive()) {
    throw std::invalid_argument(std::string(what) +
                                " requires an undirected reflexive graph");
  }
}

// Closed neighbourhood as a bitmask row; loops are added even if absent.
bool in_closed_neighbourhood(const Digraph& g, Vertex v, Vertex w) {
  return v == w || g.has_arc(v, w);
}

}  // namespace

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs, bool undirected,
                 bool reflexive)
    : n_(n), adj_(n * n, 0) {
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) {
      throw std::out_of_range("arc (" + std::to_string(u) + "," +
                              std::to_string(v) + ") references a vertex >= " +
                              std::to_string(n));
    }
    adj_[u * n + v] = 1;
    if (undirected) adj_[v * n + u] = 1;
  }
  if (reflexive) {
    for (Vertex v = 0; v < n; ++v) adj_[v * n + v] = 1;
  }
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  return from < n_ && to < n_ && adj_[from * n_ + to] != 0;
}

std::size_t Digraph::arc_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1));
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      if (adj_[u * n_ + v]) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Digraph::is_reflexive() const {
  for (Vertex v = 0; v < n_; ++v) {
    if (!adj_[v * n_ + v]) return false;
  }
  return true;
}

bool Digraph::is_undirected() const {
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (adj_[u * n_ + v] != adj_[v * n_ + u]) return false;
    }
  }
  return true;
}

Digraph Digraph::symmetric_part() const {
  Digraph out = *this;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      out.adj_[u * n_ + v] = adj_[u * n_ + v] && adj_[v * n_ + u];
    }
  }
  return out;
}

Digraph Digraph::reversed() const {
  Digraph out = *this;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) out.adj_[u * n_ + v] = adj_[v * n_ + u];
  }
  return out;
}

Digraph Digraph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) {
    throw std::invalid_argument("relabeling must cover every vertex");
  }
  std::vector<char> seen(n_, 0);
  for (Vertex p : perm) {
    if (p >= n_ || seen[p]) {
      throw std::invalid_argument("relabeling is not a permutation");
    }
    seen[p] = 1;
  }
  Digraph out = *this;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      out.adj_[perm[u] * n_ + perm[v]] = adj_[u * n_ + v];
    }
  }
  return out;
}

Digraph Digraph::induced(std::span<const Vertex> keep) const {
  std::vector<Arc> sub;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(*this, keep[i]);
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (has_arc(keep[i], keep[j])) sub.emplace_back(i, j);
    }
  }
  return Digraph(keep.size(), sub);
}

Digraph Digraph::path(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v + 1 < n; ++v) arcs.emplace_back(v, v + 1);
  return Digraph(n, arcs, true, true);
}

Digraph Digraph::cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  return Digraph(n, arcs, true, true);
}

Digraph Digraph::directed_cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  return Digraph(n, arcs, false, true);
}

Digraph Digraph::star(std::size_t leaves) {
  std::vector<Arc> arcs;
  for (Vertex v = 1; v <= leaves; ++v) arcs.emplace_back(0, v);
  return Digraph(leaves + 1, arcs, true, true);
}

Digraph Digraph::complete(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) arcs.emplace_back(u, v);
  }
  return Digraph(n, arcs, true, true);
}

VertexSet neighbors(const Digraph& g, Vertex v) {
  check_vertex(g, v);
  VertexSet out;
  for (Vertex w = 0; w < g.size(); ++w) {
    if (g.has_arc(v, w)) out.push_back(w);
  }
  return out;
}

std::vector<std::size_t> bfs_distances(const Digraph& g, Vertex source) {
  check_vertex(g, source);
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.size(), kInf);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w = 0; w < g.size(); ++w) {
      if (g.has_arc(u, w) && dist[w] == kInf) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> shortest_path(const Digraph& g, Vertex from, Vertex to) {
  check_vertex(g, to);
  // Distances to `to` over reversed arcs, then walk forward greedily.
  const auto dist = bfs_distances(g.reversed(), to);
  if (dist[from] == std::numeric_limits<std::size_t>::max()) return {};
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur != to) {
    for (Vertex w = 0; w < g.size(); ++w) {
      if (w != cur && g.has_arc(cur, w) && dist[w] + 1 == dist[cur]) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

bool is_reversible(const Digraph& g) {
  if (g.size() == 0) return true;
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  const auto fwd = bfs_distances(g, 0);
  const auto bwd = bfs_distances(g.reversed(), 0);
  return std::none_of(fwd.begin(), fwd.end(),
                      [](std::size_t d) { return d == kInf; }) &&
         std::none_of(bwd.begin(), bwd.end(),
                      [](std::size_t d) { return d == kInf; });
}

bool is_connected_undirected(const Digraph& g) {
  if (g.size() == 0) return true;
  const auto dist = bfs_distances(g.symmetric_part(), 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) {
    return d == std::numeric_limits<std::size_t>::max();
  });
}

std::optional<Vertex> is_corner(const Digraph& g, Vertex v) {
  require_undirected_reflexive(g, "is_corner");
  check_vertex(g, v);
  for (Vertex u = 0; u < g.size(); ++u) {
    if (u == v) continue;
    bool contained = true;
    for (Vertex w = 0; w < g.size() && contained; ++w) {
      if (g.has_arc(v, w) && !g.has_arc(u, w)) contained = false;
    }
    if (contained) return u;
  }
  return std::nullopt;
}

bool is_copwin_dismantle(const Digraph& g) {
  require_undirected_reflexive(g, "is_copwin_dismantle");
  if (!is_connected_undirected(g)) {
    throw std::invalid_argument("is_copwin_dismantle requires a connected graph");
  }
  std::vector<Vertex> alive(g.size());
  for (Vertex v = 0; v < g.size(); ++v) alive[v] = v;
  Digraph cur = g;
  while (cur.size() > 1) {
    std::optional<Vertex> corner;
    for (Vertex v = 0; v < cur.size() && !corner; ++v) {
      if (is_corner(cur, v)) corner = v;
    }
    if (!corner) return false;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < cur.size(); ++v) {
      if (v != *corner) keep.push_back(v);
    }
    cur = cur.induced(keep);
  }
  return true;
}

PursuitTable::PursuitTable(const Digraph& g, std::size_t cap) : g_(g) {
  const std::size_t n = g.size();
  if (n > cap) {
    throw std::invalid_argument("game solver is capped at " +
                                std::to_string(cap) + " vertices, got " +
                                std::to_string(n));
  }
  require_undirected_reflexive(g, "solve_copwin_game");
  if (n == 0 || !is_connected_undirected(g)) {
    throw std::invalid_argument("solve_copwin_game requires a connected graph");
  }

  const auto at = [n](Vertex c, Vertex r) { return c * n + r; };
  cop_rank_.assign(n * n, kLost);
  robber_rank_.assign(n * n, kLost);
  cop_move_.assign(n * n, 0);
  for (Vertex v = 0; v < n; ++v) {
    cop_rank_[at(v, v)] = 0;
    robber_rank_[at(v, v)] = 0;
    cop_move_[at(v, v)] = v;
  }
  for (Vertex c = 0; c < n; ++c) {
    for (Vertex r = 0; r < n; ++r) {
      if (c != r) cop_move_[at(c, r)] = c;
    }
  }

  // Layer k assigns the cop-to-move positions won in exactly k Cop moves,
  // then every robber-to-move position whose replies are all decided.
  for (int k = 1;; ++k) {
    bool changed = false;
    for (Vertex c = 0; c < n; ++c) {
      for (Vertex r = 0; r < n; ++r) {
        if (cop_rank_[at(c, r)] != kLost) continue;
        for (Vertex next = 0; next < n; ++next) {
          if (!g.has_arc(c, next)) continue;
          const int after = robber_rank_[at(next, r)];
          if (after != kLost && after <= k - 1) {
            cop_rank_[at(c, r)] = k;
            cop_move_[at(c, r)] = next;
            changed = true;
            break;
          }
        }
      }
    }
    for (Vertex c = 0; c < n; ++c) {
      for (Vertex r = 0; r < n; ++r) {
        if (robber_rank_[at(c, r)] != kLost) continue;
        int worst = 0;
        for (Vertex next = 0; next < n && worst != kLost; ++next) {
          if (!g.has_arc(r, next)) continue;
          const int rank = cop_rank_[at(c, next)];
          worst = rank == kLost ? kLost : std::max(worst, rank);
        }
        if (worst != kLost) {
          robber_rank_[at(c, r)] = worst;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }

  int best = kLost;
  for (Vertex c = 0; c < n; ++c) {
    int worst = 0;
    for (Vertex r = 0; r < n && worst != kLost; ++r) {
      const int rank = cop_rank_[at(c, r)];
      worst = rank == kLost ? kLost : std::max(worst, rank);
    }
    if (worst != kLost && (best == kLost || worst < best)) {
      best = worst;
      start_ = c;
    }
  }
}

int PursuitTable::cop_to_move_rank(Vertex cop, Vertex robber) const {
  check_vertex(g_, cop);
  check_vertex(g_, robber);
  return cop_rank_[cop * g_.size() + robber];
}

int PursuitTable::robber_to_move_rank(Vertex cop, Vertex robber) const {
  check_vertex(g_, cop);
  check_vertex(g_, robber);
  return robber_rank_[cop * g_.size() + robber];
}

Vertex PursuitTable::best_cop_move(Vertex cop, Vertex robber) const {
  check_vertex(g_, cop);
  check_vertex(g_, robber);
  return cop_move_[cop * g_.size() + robber];
}

bool solve_copwin_game(const Digraph& g, std::size_t cap) {
  return PursuitTable(g, cap).cop_wins();
}

bool is_dominating(const Digraph& g, std::span<const Vertex> set) {
  for (Vertex v = 0; v < g.size(); ++v) {
    const bool covered = std::any_of(set.begin(), set.end(), [&](Vertex d) {
      return d < g.size() && in_closed_neighbourhood(g, d, v);
    });
    if (!covered) return false;
  }
  return true;
}

VertexSet dominating_set(const Digraph& g, DominatingMode mode) {
  const std::size_t n = g.size();
  if (mode == DominatingMode::kExact) {
    if (n > kExactDominatingCap) {
      throw std::invalid_argument("exact dominating set is capped at " +
                                  std::to_string(kExactDominatingCap) +
                                  " vertices");
    }
    for (std::size_t size = 0; size <= n; ++size) {
      // Lexicographic enumeration of size-subsets.
      std::vector<char> pick(n, 0);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), 1);
      do {
        VertexSet cand;
        for (Vertex v = 0; v < n; ++v) {
          if (pick[v]) cand.push_back(v);
        }
        if (is_dominating(g, cand)) return cand;
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return {};
  }

  std::vector<char> covered(n, 0);
  std::size_t remaining = n;
  VertexSet out;
  while (remaining > 0) {
    Vertex best = 0;
    std::size_t best_gain = 0;
    for (Vertex d = 0; d < n; ++d) {
      std::size_t gain = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (!covered[v] && in_closed_neighbourhood(g, d, v)) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = d;
      }
    }
    out.push_back(best);
    for (Vertex v = 0; v < n; ++v) {
      if (!covered[v] && in_closed_neighbourhood(g, best, v)) {
        covered[v] = 1;
        --remaining;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Vertex> universal_vertex(const Digraph& g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    const Vertex single[] = {v};
    if (is_dominating(g, single)) return v;
  }
  return std::nullopt;
}

Digraph SpanningTree::as_graph() const {
  std::vector<Arc> edges;
  for (Vertex v = 0; v < parent.size(); ++v) {
    if (parent[v] != v) edges.emplace_back(v, parent[v]);
  }
  return Digraph(parent.size(), edges, true, true);
}

SpanningTree spanning_tree(const Digraph& g, Vertex root) {
  check_vertex(g, root);
  const Digraph sym = g.symmetric_part();
  const std::size_t n = g.size();
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();

  SpanningTree tree;
  tree.root = root;
  tree.parent.assign(n, root);
  tree.depth.assign(n, kInf);
  tree.depth[root] = 0;
  std::queue<Vertex> frontier;
  frontier.push(root);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w = 0; w < n; ++w) {
      if (w != u && sym.has_arc(u, w) && tree.depth[w] == kInf) {
        tree.depth[w] = tree.depth[u] + 1;
        tree.parent[w] = u;
        frontier.push(w);
      }
    }
  }
  if (std::any_of(tree.depth.begin(), tree.depth.end(),
                  [](std::size_t d) { return d == kInf; })) {
    throw std::invalid_argument(
        "graph has no undirected spanning tree (symmetric arcs do not connect "
        "all vertices)");
  }

  tree.order.resize(n);
  for (Vertex v = 0; v < n; ++v) tree.order[v] = v;
  std::sort(tree.order.begin(), tree.order.end(), [&](Vertex a, Vertex b) {
    if (tree.depth[a] != tree.depth[b]) return tree.depth[a] > tree.depth[b];
    return a < b;
  });
  return tree;
}

Digraph disjoint_union(const Digraph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("disjoint_union needs k >= 1");
  const std::size_t n = g.size();
  std::vector<Arc> arcs;
  const auto base = g.arcs();
  arcs.reserve(base.size() * k);
  for (std::size_t copy = 0; copy < k; ++copy) {
    for (const auto& [u, v] : base) arcs.emplace_back(copy * n + u, copy * n + v);
  }
  return Digraph(n * k, arcs);
}

VertexSet support_ball(const Digraph& g, Vertex v, std::size_t k) {
  const auto dist = bfs_distances(g, v);
  VertexSet out;
  for (Vertex w = 0; w < g.size(); ++w) {
    if (dist[w] <= k) out.push_back(w);
  }
  return out;
}

}  // namespace copgame
