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

#include "copgame/quantum_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace copgame {

namespace {

constexpr double kZeroBlock = 1e-14;

cplx phase(double angle) { return std::polar(1.0, angle); }

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// Unitary whose first column is the unit vector (a0, a1).
Eigen::Matrix2cd completion(cplx a0, cplx a1) {
  Eigen::Matrix2cd m;
  m << a0, -std::conj(a1), a1, std::conj(a0);
  return m;
}

}  // namespace

const char* to_string(Player p) {
  return p == Player::kCop ? "cop" : "robber";
}

QuantumState::QuantumState(ComplexVector amps, double tol)
    : amps_(std::move(amps)) {
  if (amps_.size() == 0) {
    throw std::invalid_argument("quantum state needs dimension >= 1");
  }
  const double norm = amps_.norm();
  if (!(std::abs(norm - 1.0) <= tol)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "state is not normalized (norm %.12g)", norm);
    throw std::invalid_argument(buf);
  }
}

QuantumState QuantumState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("basis index out of range");
  ComplexVector v = ComplexVector::Zero(idx(dim));
  v(idx(index)) = 1.0;
  return QuantumState(std::move(v));
}

QuantumState QuantumState::uniform(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("quantum state needs dimension >= 1");
  return QuantumState(
      ComplexVector::Constant(idx(dim), 1.0 / std::sqrt(static_cast<double>(dim))));
}

QuantumState QuantumState::normalize(const ComplexVector& amps) {
  const double norm = amps.norm();
  if (norm == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  return QuantumState(amps / norm);
}

double QuantumState::fidelity(const QuantumState& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("state dimension mismatch");
  return std::abs(amps_.dot(other.amps_));
}

std::string CertificationReport::summary() const {
  if (!size_ok) return "FAIL size mismatch";
  std::string out = ok() ? "PASS" : "FAIL";
  char buf[128];
  std::snprintf(buf, sizeof buf, " residual=%.3e", residual);
  out += buf;
  if (negativity > 0) {
    std::snprintf(buf, sizeof buf, " negativity=%.3e", negativity);
    out += buf;
  }
  if (!violations.empty()) {
    out += " non-arc entries:";
    for (const auto& v : violations) {
      std::snprintf(buf, sizeof buf, " (%zu,%zu)=%.3e", v.row, v.col, v.magnitude);
      out += buf;
    }
  }
  return out;
}

CertificationReport is_graph_preserving_unitary(const ComplexMatrix& m,
                                                const Digraph& g, double tol) {
  CertificationReport report;
  report.tolerance = tol;
  const auto n = idx(g.size());
  if (m.rows() != n || m.cols() != n) {
    report.size_ok = false;
    return report;
  }
  report.residual = unitarity_residual(m);
  for (std::size_t col = 0; col < g.size(); ++col) {
    for (std::size_t row = 0; row < g.size(); ++row) {
      const double mag = std::abs(m(idx(row), idx(col)));
      if (!g.has_arc(col, row) && mag > tol) report.violations.push_back({row, col, mag});
    }
  }
  return report;
}

CertificationReport is_graph_preserving_stochastic(const RealMatrix& m,
                                                   const Digraph& g, double tol) {
  CertificationReport report;
  report.tolerance = tol;
  const auto n = idx(g.size());
  if (m.rows() != n || m.cols() != n) {
    report.size_ok = false;
    return report;
  }
  for (Eigen::Index col = 0; col < n; ++col) {
    report.residual = std::max(report.residual, std::abs(m.col(col).sum() - 1.0));
  }
  if (m.size() > 0) report.negativity = std::max(0.0, -m.minCoeff());
  for (std::size_t col = 0; col < g.size(); ++col) {
    for (std::size_t row = 0; row < g.size(); ++row) {
      const double mag = std::abs(m(idx(row), idx(col)));
      if (!g.has_arc(col, row) && mag > tol) report.violations.push_back({row, col, mag});
    }
  }
  return report;
}

GraphUnitary::GraphUnitary(ComplexMatrix m, Digraph g, double tol)
    : m_(std::move(m)), g_(std::move(g)) {
  auto report = is_graph_preserving_unitary(m_, g_, tol);
  if (!report.ok()) {
    throw IllegalOperation("operator is not a graph-preserving unitary",
                           std::move(report));
  }
}

GraphUnitary GraphUnitary::identity(const Digraph& g) {
  return GraphUnitary(ComplexMatrix::Identity(idx(g.size()), idx(g.size())), g);
}

GraphUnitary GraphUnitary::adjoint() const {
  return GraphUnitary(m_.adjoint(), g_.is_undirected() ? g_ : g_.reversed());
}

QuantumState GraphUnitary::apply(const QuantumState& s) const {
  if (s.dim() != size()) throw std::invalid_argument("state dimension mismatch");
  return QuantumState(m_ * s.amplitudes());
}

bool GraphUnitary::is_identity(double tol) const {
  return (m_ - ComplexMatrix::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff() <=
         tol;
}

GraphStochastic::GraphStochastic(RealMatrix m, Digraph g, double tol)
    : m_(std::move(m)), g_(std::move(g)) {
  auto report = is_graph_preserving_stochastic(m_, g_, tol);
  if (!report.ok()) {
    throw IllegalOperation("operator is not a graph-preserving stochastic matrix",
                           std::move(report));
  }
}

GraphStochastic GraphStochastic::identity(const Digraph& g) {
  return GraphStochastic(RealMatrix::Identity(idx(g.size()), idx(g.size())), g);
}

ControlledOp::ControlledOp(Player control, std::vector<GraphUnitary> blocks)
    : control_(control), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("controlled operation has no blocks");
  const Digraph& g = blocks_.front().graph();
  if (blocks_.size() != g.size()) {
    throw std::invalid_argument("controlled operation needs one block per vertex: got " +
                                std::to_string(blocks_.size()) + " for " +
                                std::to_string(g.size()) + " vertices");
  }
  for (const auto& b : blocks_) {
    if (!(b.graph() == g)) {
      throw std::invalid_argument("controlled operation blocks certified against "
                                  "different graphs");
    }
  }
}

ControlledOp ControlledOp::constant(Player control, const GraphUnitary& u) {
  return ControlledOp(control, std::vector<GraphUnitary>(u.size(), u));
}

ComplexMatrix ControlledOp::joint_matrix() const {
  const auto n = idx(size());
  ComplexMatrix out = ComplexMatrix::Zero(n * n, n * n);
  for (Eigen::Index v = 0; v < n; ++v) {
    const ComplexMatrix& u = blocks_[static_cast<std::size_t>(v)].matrix();
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (control_ == Player::kRobber) {
          out(v * n + i, v * n + j) = u(i, j);
        } else {
          out(i * n + v, j * n + v) = u(i, j);
        }
      }
    }
  }
  return out;
}

ComplexVector ControlledOp::apply(const ComplexVector& joint) const {
  const auto n = idx(size());
  if (joint.size() != n * n) throw std::invalid_argument("joint state dimension mismatch");
  ComplexVector out(joint.size());
  for (Eigen::Index v = 0; v < n; ++v) {
    const ComplexMatrix& u = blocks_[static_cast<std::size_t>(v)].matrix();
    if (control_ == Player::kRobber) {
      out.segment(v * n, n) = u * joint.segment(v * n, n);
    } else {
      ComplexVector slice(n);
      for (Eigen::Index r = 0; r < n; ++r) slice(r) = joint(r * n + v);
      slice = u * slice;
      for (Eigen::Index r = 0; r < n; ++r) out(r * n + v) = slice(r);
    }
  }
  return out;
}

bool ControlledOp::is_local(double tol) const {
  const ComplexMatrix& first = blocks_.front().matrix();
  return std::all_of(blocks_.begin(), blocks_.end(), [&](const GraphUnitary& b) {
    return (b.matrix() - first).cwiseAbs().maxCoeff() <= tol;
  });
}

Digraph ControlledOp::joint_graph() const {
  const std::size_t n = size();
  const Digraph blocks = disjoint_union(graph(), n);
  if (control_ == Player::kRobber) return blocks;
  // Copy c holds the robber register for cop vertex c at c*n + r.
  std::vector<Vertex> perm(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) perm[c * n + r] = r * n + c;
  }
  return blocks.relabeled(perm);
}

ControlledOp controlled_op(const Digraph& g, std::span<const GraphUnitary> assignment,
                           Player control) {
  if (assignment.size() != g.size()) {
    throw std::invalid_argument("controlled operation is missing an assignment: " +
                                std::to_string(assignment.size()) + " blocks for " +
                                std::to_string(g.size()) + " vertices");
  }
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    if (!(assignment[v].graph() == g)) {
      throw std::invalid_argument("block for vertex " + std::to_string(v) +
                                  " is not certified against this graph");
    }
  }
  return ControlledOp(control, {assignment.begin(), assignment.end()});
}

GraphUnitary gather_unitary(const Digraph& g, Vertex v, Vertex w,
                            const QuantumState& phi, std::pair<cplx, cplx> target) {
  if (v >= g.size() || w >= g.size()) throw std::out_of_range("vertex out of range");
  if (phi.dim() != g.size()) throw std::invalid_argument("state dimension mismatch");
  if (v == w || !g.has_arc(v, w) || !g.has_arc(w, v) || !g.has_arc(v, v) ||
      !g.has_arc(w, w)) {
    throw std::invalid_argument("gather_unitary needs two distinct, mutually adjacent "
                                "vertices with loops");
  }
  const cplx a0 = phi[v];
  const cplx a1 = phi[w];
  const auto [b0, b1] = target;
  const double source_sq = std::norm(a0) + std::norm(a1);
  const double target_sq = std::norm(b0) + std::norm(b1);
  if (std::abs(source_sq - target_sq) > kTolerance) {
    throw std::invalid_argument("gather_unitary target norm differs from source norm");
  }
  const double r = std::sqrt(source_sq);
  if (r <= kZeroBlock) return GraphUnitary::identity(g);

  const double rt = std::sqrt(target_sq);
  const Eigen::Matrix2cd block =
      completion(b0 / rt, b1 / rt) * completion(a0 / r, a1 / r).adjoint();
  ComplexMatrix m = ComplexMatrix::Identity(idx(g.size()), idx(g.size()));
  m(idx(v), idx(v)) = block(0, 0);
  m(idx(v), idx(w)) = block(0, 1);
  m(idx(w), idx(v)) = block(1, 0);
  m(idx(w), idx(w)) = block(1, 1);
  return GraphUnitary(std::move(m), g);
}

namespace {

// Gathers all amplitude of `s` into the tree root, leaves first.
std::vector<GraphUnitary> gather_to_root(const SpanningTree& tree, const Digraph& tg,
                                         QuantumState s) {
  std::vector<GraphUnitary> ops;
  for (std::size_t i = 0; i + 1 < tree.order.size(); ++i) {
    const Vertex v = tree.order[i];
    const Vertex up = tree.parent[v];
    const cplx keep = s[up];
    const double mass = std::sqrt(std::norm(s[v]) + std::norm(keep));
    const cplx dir = std::abs(keep) > 0 ? keep / std::abs(keep) : cplx(1.0);
    ops.push_back(gather_unitary(tg, v, up, s, {cplx(0.0), mass * dir}));
    s = ops.back().apply(s);
  }
  return ops;
}

}  // namespace

std::vector<GraphUnitary> reach_sequence(const Digraph& g, const QuantumState& phi,
                                         const QuantumState& psi, Vertex root) {
  if (phi.dim() != g.size() || psi.dim() != g.size()) {
    throw std::invalid_argument("state dimension does not match the graph");
  }
  if (!g.is_reflexive()) throw std::invalid_argument("reach_sequence needs a reflexive graph");
  if (!is_reversible(g)) throw std::invalid_argument("reach_sequence needs a reversible graph");
  const SpanningTree tree = spanning_tree(g, root);
  if (phi.fidelity(psi) >= 1.0 - kTolerance) return {};

  const Digraph tg = tree.as_graph();
  std::vector<GraphUnitary> seq = gather_to_root(tree, tg, phi);
  const std::vector<GraphUnitary> back = gather_to_root(tree, tg, psi);
  for (auto it = back.rbegin(); it != back.rend(); ++it) seq.push_back(it->adjoint());
  std::erase_if(seq, [](const GraphUnitary& u) { return u.is_identity(); });
  return seq;
}

QuantumState compose_apply(std::span<const GraphUnitary> ops, const QuantumState& s) {
  ComplexVector v = s.amplitudes();
  for (const auto& u : ops) v = u.apply(v);
  return QuantumState::normalize(v);
}

GraphUnitary cycle_unitary(std::span<const double> phases) {
  const std::size_t n = phases.size();
  if (n == 0) throw std::invalid_argument("cycle_unitary needs n >= 1");
  ComplexMatrix m = ComplexMatrix::Zero(idx(n), idx(n));
  for (std::size_t i = 0; i < n; ++i) m(idx((i + 1) % n), idx(i)) = phase(phases[i]);
  return GraphUnitary(std::move(m), Digraph::directed_cycle(n));
}

GraphUnitary transposition_unitary(const Digraph& g, Vertex v, Vertex w) {
  if (v >= g.size() || w >= g.size()) throw std::out_of_range("vertex out of range");
  if (v == w) return GraphUnitary::identity(g);
  if (!g.has_arc(v, w) || !g.has_arc(w, v)) {
    throw std::invalid_argument("transposition of non-adjacent vertices " +
                                std::to_string(v) + " and " + std::to_string(w));
  }
  ComplexMatrix m = ComplexMatrix::Identity(idx(g.size()), idx(g.size()));
  m(idx(v), idx(v)) = 0.0;
  m(idx(w), idx(w)) = 0.0;
  m(idx(v), idx(w)) = 1.0;
  m(idx(w), idx(v)) = 1.0;
  return GraphUnitary(std::move(m), g);
}

GraphUnitary gather_unitary_c4(const C4Amplitudes& a, double psi, double alpha) {
  const double norm_sq = a.r_alpha * a.r_alpha + a.r_beta * a.r_beta + a.r_gamma * a.r_gamma;
  if (std::abs(norm_sq - 1.0) > kTolerance || a.r_alpha < 0 || a.r_beta < 0 ||
      a.r_gamma < 0) {
    throw std::invalid_argument("C4 gather needs nonnegative moduli with unit norm");
  }
  const double ra = a.r_alpha, rb = a.r_beta, rg = a.r_gamma;
  const double ka = a.k_alpha, kb = a.k_beta, kg = a.k_gamma;
  constexpr double pi = std::numbers::pi;

  Eigen::Matrix4cd v;
  v << -phase(kb - kg + psi) * rb, phase(ka - kg + psi) * ra, 0.0,
      phase(-(-ka + kg + alpha + pi)) * rg,
      //
      phase(-(ka - kg + psi)) * ra, phase(-(kb - kg + psi)) * rb, phase(-psi) * rg, 0.0,
      //
      0.0, phase(psi) * rg, -phase(kb - kg + psi) * rb, phase(-alpha) * ra,
      //
      -phase(-(ka - kg - alpha)) * rg, 0.0, phase(alpha) * ra, phase(-(kb - kg + psi)) * rb;
  return GraphUnitary(ComplexMatrix(v), Digraph::cycle(4));
}

std::optional<C4Amplitudes> c4_amplitudes(const ComplexVector& v, Vertex first) {
  if (v.size() != 4) throw std::invalid_argument("c4_amplitudes needs a 4-vector");
  const cplx x = v(idx(first % 4));
  const cplx y = v(idx((first + 1) % 4));
  const cplx z = v(idx((first + 2) % 4));
  const double norm = std::sqrt(std::norm(x) + std::norm(y) + std::norm(z));
  if (norm <= kZeroBlock) return std::nullopt;
  return C4Amplitudes{std::abs(x) / norm, std::arg(x), std::abs(y) / norm,
                      std::arg(y),        std::abs(z) / norm, std::arg(z)};
}

GraphUnitary relabel(const GraphUnitary& u, std::span<const Vertex> perm) {
  const Digraph g = u.graph().relabeled(perm);
  const ComplexMatrix& m = u.matrix();
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = 0; j < perm.size(); ++j) {
      out(idx(perm[i]), idx(perm[j])) = m(idx(i), idx(j));
    }
  }
  return GraphUnitary(std::move(out), g);
}

std::vector<Vertex> rotation(std::size_t n, std::size_t shift) {
  std::vector<Vertex> perm(n);
  for (std::size_t v = 0; v < n; ++v) perm[v] = (v + shift) % n;
  return perm;
}

GraphUnitary sample_graph_unitary(const Digraph& g, Rng& rng, std::size_t max_block) {
  if (!g.is_reflexive()) {
    throw std::invalid_argument("sample_graph_unitary needs a reflexive graph");
  }
  const std::size_t n = g.size();
  std::vector<Vertex> pending(n);
  for (Vertex v = 0; v < n; ++v) pending[v] = v;
  std::shuffle(pending.begin(), pending.end(), rng);
  std::vector<char> used(n, 0);
  std::uniform_int_distribution<std::size_t> pick_size(1, std::max<std::size_t>(1, max_block));

  ComplexMatrix m = ComplexMatrix::Zero(idx(n), idx(n));
  for (Vertex seed : pending) {
    if (used[seed]) continue;
    std::vector<Vertex> block{seed};
    used[seed] = 1;
    const std::size_t want = pick_size(rng);
    for (Vertex cand : pending) {
      if (block.size() >= want) break;
      if (used[cand]) continue;
      const bool clique = std::all_of(block.begin(), block.end(), [&](Vertex b) {
        return g.has_arc(b, cand) && g.has_arc(cand, b);
      });
      if (clique) {
        block.push_back(cand);
        used[cand] = 1;
      }
    }
    const ComplexMatrix h = haar_unitary(block.size(), rng);
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = 0; j < block.size(); ++j) {
        m(idx(block[i]), idx(block[j])) = h(idx(i), idx(j));
      }
    }
  }
  return GraphUnitary(std::move(m), g);
}

GraphUnitary sample_p3_unitary(Rng& rng) {
  std::bernoulli_distribution lower(0.5);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const ComplexMatrix h = haar_unitary(2, rng);
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  if (lower(rng)) {
    // <1|U|0> = 0: phase on |0>, block on {1, 2}.
    m(0, 0) = phase(angle(rng));
    m.block(1, 1, 2, 2) = h;
  } else {
    // <1|U|2> = 0: block on {0, 1}, phase on |2>.
    m.block(0, 0, 2, 2) = h;
    m(2, 2) = phase(angle(rng));
  }
  return GraphUnitary(std::move(m), Digraph::path(3));
}

}  // namespace copgame
