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
 * Operators on the vertex space of a graph.
 *
 * Matrices use column = source vertex, row = target vertex, so an operator
 * preserves a graph when entry (w, v) vanishes for every non-arc (v, w).
 * Joint two-player states are robber-major: index = r * n + c.
 */

#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "copgame/graph.hpp"
#include "copgame/linalg.hpp"

namespace copgame {

enum class Player { kCop, kRobber };

inline Player opponent(Player p) {
  return p == Player::kCop ? Player::kRobber : Player::kCop;
}
const char* to_string(Player p);

/// Normalized pure state.
class QuantumState {
 public:
  /// Throws std::invalid_argument unless | ||amps|| - 1 | <= tol.
  explicit QuantumState(ComplexVector amps, double tol = kTolerance);

  static QuantumState basis(std::size_t dim, std::size_t index);
  static QuantumState uniform(std::size_t dim);
  /// Rescales to unit norm; throws on the zero vector.
  static QuantumState normalize(const ComplexVector& amps);

  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const ComplexVector& amplitudes() const { return amps_; }
  cplx operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

  /// |<this|other>|, insensitive to global phase.
  double fidelity(const QuantumState& other) const;

 private:
  ComplexVector amps_;
};

struct EntryViolation {
  std::size_t row = 0;  // target vertex
  std::size_t col = 0;  // source vertex
  double magnitude = 0.0;
};

/// Outcome of checking a matrix against a graph.
struct CertificationReport {
  bool size_ok = true;
  /// Unitary: max |U^dagger U - I|. Stochastic: max |column sum - 1|.
  double residual = 0.0;
  /// Stochastic only: magnitude of the most negative entry (0 if none).
  double negativity = 0.0;
  double tolerance = kTolerance;
  std::vector<EntryViolation> violations;

  bool ok() const {
    return size_ok && residual <= tolerance && negativity <= tolerance &&
           violations.empty();
  }
  std::string summary() const;
};

CertificationReport is_graph_preserving_unitary(const ComplexMatrix& m,
                                                const Digraph& g,
                                                double tol = kTolerance);
CertificationReport is_graph_preserving_stochastic(const RealMatrix& m,
                                                   const Digraph& g,
                                                   double tol = kTolerance);

/// An operator that failed certification, with the reason attached.
class IllegalOperation : public std::invalid_argument {
 public:
  IllegalOperation(const std::string& what, CertificationReport report)
      : std::invalid_argument(what + ": " + report.summary()),
        report_(std::move(report)) {}
  const CertificationReport& report() const { return report_; }

 private:
  CertificationReport report_;
};

/// A unitary that passed is_graph_preserving_unitary against graph().
class GraphUnitary {
 public:
  /// Throws IllegalOperation when certification fails.
  GraphUnitary(ComplexMatrix m, Digraph g, double tol = kTolerance);

  static GraphUnitary identity(const Digraph& g);

  const ComplexMatrix& matrix() const { return m_; }
  const Digraph& graph() const { return g_; }
  std::size_t size() const { return g_.size(); }

  /// Certified against the reversed graph (the same graph when undirected).
  GraphUnitary adjoint() const;
  QuantumState apply(const QuantumState& s) const;
  ComplexVector apply(const ComplexVector& v) const { return m_ * v; }
  bool is_identity(double tol = kTolerance) const;

 private:
  ComplexMatrix m_;
  Digraph g_;
};

/// A column-stochastic matrix that passed is_graph_preserving_stochastic.
class GraphStochastic {
 public:
  GraphStochastic(RealMatrix m, Digraph g, double tol = kTolerance);

  static GraphStochastic identity(const Digraph& g);

  const RealMatrix& matrix() const { return m_; }
  const Digraph& graph() const { return g_; }
  RealVector apply(const RealVector& p) const { return m_ * p; }

 private:
  RealMatrix m_;
  Digraph g_;
};

/// Block operator sum_v |v><v| (x) U(v) with the control on one player's
/// register and the blocks acting on the other player's register.
class ControlledOp {
 public:
  /// Throws std::invalid_argument when the number of blocks is not g.size()
  /// or the blocks are certified against different graphs.
  ControlledOp(Player control, std::vector<GraphUnitary> blocks);

  /// The classically controlled move I (x) U.
  static ControlledOp constant(Player control, const GraphUnitary& u);

  Player control() const { return control_; }
  Player target() const { return opponent(control_); }
  const Digraph& graph() const { return blocks_.front().graph(); }
  std::size_t size() const { return blocks_.size(); }
  const GraphUnitary& block(Vertex v) const { return blocks_.at(v); }

  /// Dense n^2 x n^2 matrix in the robber-major joint layout.
  ComplexMatrix joint_matrix() const;
  /// Blockwise application to a joint state.
  ComplexVector apply(const ComplexVector& joint) const;
  /// All blocks equal, i.e. the operation needs no quantum control.
  bool is_local(double tol = kTolerance) const;
  /// disjoint_union(graph(), n) relabeled into the robber-major layout; the
  /// joint matrix is graph-preserving against it.
  Digraph joint_graph() const;

 private:
  Player control_;
  std::vector<GraphUnitary> blocks_;
};

/// Validates the assignment against g and builds the controlled operation.
ControlledOp controlled_op(const Digraph& g,
                           std::span<const GraphUnitary> assignment,
                           Player control);

/// Unitary acting as identity outside span{|v>,|w>} that sends the (v, w)
/// components of phi to `target`. The 2x2 block is B A^dagger, where A and B
/// are the unitaries whose first columns are the normalized source and
/// target pairs. A zero-norm source block yields the identity.
GraphUnitary gather_unitary(const Digraph& g, Vertex v, Vertex w,
                            const QuantumState& phi,
                            std::pair<cplx, cplx> target);

/// Operators U_1..U_m, m <= 2n-2, with U_m...U_1 phi = psi up to global
/// phase. The first half gathers phi into |root> along a breadth-first
/// spanning tree; the second half is the adjoint of the gather sequence of
/// psi, in reverse. Identity steps are dropped, and an empty sequence is
/// returned when phi already equals psi up to phase. Each operator is
/// certified against the spanning tree's graph.
std::vector<GraphUnitary> reach_sequence(const Digraph& g,
                                         const QuantumState& phi,
                                         const QuantumState& psi, Vertex root);

/// Applies the operators in order.
QuantumState compose_apply(std::span<const GraphUnitary> ops,
                           const QuantumState& s);

/// sum_i exp(i alpha_i) |i+1 mod n><i|, certified against the reflexive
/// directed n-cycle.
GraphUnitary cycle_unitary(std::span<const double> phases);

/// Swap of v and w fixing every other vertex. Requires arcs both ways.
GraphUnitary transposition_unitary(const Digraph& g, Vertex v, Vertex w);

/// Moduli and phases of r_a e^{i k_a}|0> + r_b e^{i k_b}|1> + r_g e^{i k_g}|2>.
struct C4Amplitudes {
  double r_alpha = 0, k_alpha = 0;
  double r_beta = 0, k_beta = 0;
  double r_gamma = 0, k_gamma = 0;
};

/// Explicit unitary on the reflexive 4-cycle (edges 01, 12, 23, 30) that maps
/// the state above to e^{i(k_gamma - psi)}|1>; `alpha` is a free phase on
/// the image of |3>. Throws std::invalid_argument unless the moduli square
/// to 1 within kTolerance.
GraphUnitary gather_unitary_c4(const C4Amplitudes& amps, double psi,
                               double alpha);

/// Reads moduli and phases of the components at `first`, first+1, first+2
/// (mod 4) of an arbitrary nonzero vector and rescales them to unit norm.
/// Returns nullopt when those three components vanish.
std::optional<C4Amplitudes> c4_amplitudes(const ComplexVector& v, Vertex first);

/// P U P^dagger for the permutation P|v> = |perm[v]>, certified against the
/// relabeled graph.
GraphUnitary relabel(const GraphUnitary& u, std::span<const Vertex> perm);

/// Rotation v -> v + shift (mod n).
std::vector<Vertex> rotation(std::size_t n, std::size_t shift);

/// Random member of U_G: a random partition of the vertices into small
/// cliques of mutually adjacent vertices, each carrying a Haar block.
GraphUnitary sample_graph_unitary(const Digraph& g, Rng& rng,
                                  std::size_t max_block = 3);

/// Random member of U_G for the path 0-1-2. One of the two families
/// forced by orthogonality of columns 0 and 2 is picked at random: a phase
/// on |0> with a Haar block on {1,2}, or a Haar block on {0,1} with a phase
/// on |2>.
GraphUnitary sample_p3_unitary(Rng& rng);

}  // namespace copgame
