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

#pragma once

#include <complex>
#include <cstddef>
#include <random>

#include <Eigen/Dense>

namespace copgame {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

/// Certification and fidelity tolerance.
inline constexpr double kTolerance = 1e-9;
/// Slack for derived inequalities (products of certified entries).
inline constexpr double kInequalityTolerance = 1e-8;

/// Kronecker product a (x) b; the index of a is the major one.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Haar-distributed k x k unitary (QR of a complex Ginibre matrix with the
/// diagonal phases of R divided out).
ComplexMatrix haar_unitary(std::size_t k, Rng& rng);

/// Uniformly distributed pure state of dimension `dim`.
ComplexVector random_amplitudes(std::size_t dim, Rng& rng);

/// Uniformly distributed point of the probability simplex.
RealVector random_distribution(std::size_t dim, Rng& rng);

/// max |(m^dagger m - I)_{ij}|.
double unitarity_residual(const ComplexMatrix& m);

}  // namespace copgame
