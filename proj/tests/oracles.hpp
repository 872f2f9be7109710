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

// Slow, obviously-correct reference implementations used only by tests.
// None of these call into the library beyond Digraph::has_arc.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "copgame/graph.hpp"
#include "copgame/linalg.hpp"

namespace copgame::oracle {

inline std::vector<std::vector<bool>> adjacency(const Digraph& g) {
  std::vector<std::vector<bool>> a(g.size(), std::vector<bool>(g.size()));
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = 0; v < g.size(); ++v) a[u][v] = g.has_arc(u, v);
  }
  return a;
}

// Naive fixed point over (cop, robber, side to move). Cop places first,
// then the Robber, then the Cop moves.
inline bool copwin_fixed_point(const Digraph& g) {
  const std::size_t n = g.size();
  const auto a = adjacency(g);
  std::vector<std::vector<bool>> cop_turn(n, std::vector<bool>(n));
  std::vector<std::vector<bool>> robber_turn(n, std::vector<bool>(n));
  for (Vertex c = 0; c < n; ++c) cop_turn[c][c] = robber_turn[c][c] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex c = 0; c < n; ++c) {
      for (Vertex r = 0; r < n; ++r) {
        if (!cop_turn[c][r]) {
          bool win = false;
          for (Vertex c2 = 0; c2 < n && !win; ++c2) win = a[c][c2] && robber_turn[c2][r];
          if (win) cop_turn[c][r] = changed = true;
        }
        if (!robber_turn[c][r]) {
          bool win = true;
          for (Vertex r2 = 0; r2 < n && win; ++r2) win = !a[r][r2] || cop_turn[c][r2];
          if (win) robber_turn[c][r] = changed = true;
        }
      }
    }
  }
  for (Vertex c = 0; c < n; ++c) {
    if (std::all_of(cop_turn[c].begin(), cop_turn[c].end(), [](bool b) { return b; })) return true;
  }
  return false;
}

// Closed out-neighbourhood containment, straight from the definition.
inline bool is_corner(const Digraph& g, Vertex v) {
  const auto a = adjacency(g);
  for (Vertex u = 0; u < g.size(); ++u) {
    if (u == v) continue;
    bool inside = true;
    for (Vertex x = 0; x < g.size(); ++x) inside = inside && (!a[v][x] || a[u][x]);
    if (inside) return true;
  }
  return false;
}

inline std::size_t min_dominating_size(const Digraph& g) {
  const std::size_t n = g.size();
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool dominated = true;
    for (Vertex x = 0; x < n && dominated; ++x) {
      bool hit = false;
      for (Vertex d = 0; d < n && !hit; ++d) hit = (mask >> d & 1u) && g.has_arc(d, x);
      dominated = hit;
    }
    if (dominated) best = std::min<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

// Every undirected reflexive labelled graph on n vertices, one per edge mask.
inline void for_each_graph(std::size_t n, const std::function<void(const Digraph&)>& f) {
  std::vector<Arc> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Arc> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1u) edges.push_back(pairs[i]);
    }
    f(Digraph(n, edges, true, true));
  }
}

inline bool connected(const Digraph& g) {
  if (g.size() == 0) return true;
  std::vector<bool> seen(g.size());
  std::vector<Vertex> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v = 0; v < g.size(); ++v) {
      if (!seen[v] && (g.has_arc(u, v) || g.has_arc(v, u))) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// sum_v |v><v| (x) U(v) or sum_v U(v) (x) |v><v| by explicit Kronecker products;
// the first factor is the Robber register.
inline ComplexMatrix controlled_sum(const std::vector<ComplexMatrix>& blocks, bool control_robber) {
  const auto n = static_cast<Eigen::Index>(blocks.size());
  ComplexMatrix out = ComplexMatrix::Zero(n * n, n * n);
  for (Eigen::Index v = 0; v < n; ++v) {
    ComplexMatrix proj = ComplexMatrix::Zero(n, n);
    proj(v, v) = 1.0;
    const ComplexMatrix& u = blocks[static_cast<std::size_t>(v)];
    if (control_robber) {
      out += Eigen::kroneckerProduct(proj, u).eval();
    } else {
      out += Eigen::kroneckerProduct(u, proj).eval();
    }
  }
  return out;
}

}  // namespace copgame::oracle
