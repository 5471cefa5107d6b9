// Copyright 2026 The qss3 developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qss3/qmath.hpp"
#include "qss3/states.hpp"

namespace qss3 {

// Imaginary residue allowed on Pauli expectations before the real part is kept.
inline constexpr double kImagTol = 1e-10;

/// Pauli matrix: 0 is the identity, 1..3 are sigma_x, sigma_y, sigma_z.
ComplexMatrix pauli_matrix(int i);

/// Bloch decomposition of a two-qubit density matrix:
/// rho = (I + r.sigma x I + I x s.sigma + sum t_ij sigma_i x sigma_j) / 4.
struct BlochDecomp2 {
  Vec3 r{};       // first party
  Vec3 s{};       // second party
  RealMatrix3 t;  // t(i,j) = <sigma_i x sigma_j>
};

/// 3x3x3 array of three-party Pauli expectations.
struct Tensor3 {
  std::array<double, 27> e{};

  double& operator()(int i, int j, int k) { return e[(i * 3 + j) * 3 + k]; }
  double operator()(int i, int j, int k) const { return e[(i * 3 + j) * 3 + k]; }
  double max_abs() const;
};

/// Bloch decomposition of a three-qubit density matrix: local vectors a, b, c
/// (dealer, assistant, reconstructor), pair correlation matrices Q (AB),
/// R (AC), S (BC) and the full correlation tensor tau.
struct BlochDecomp3 {
  Vec3 a{}, b{}, c{};
  RealMatrix3 q, r, s;
  Tensor3 tau;
};

BlochDecomp2 bloch2(const ComplexMatrix& rho);
BlochDecomp3 bloch3(const ComplexMatrix& rho);

/// Rebuilds the density matrix from its decomposition (inverse of bloch2/3).
ComplexMatrix reconstruct2(const BlochDecomp2& d);
ComplexMatrix reconstruct3(const BlochDecomp3& d);

/// Contraction of the correlation tensor along the assistant index:
/// out(i,k) = sum_j axis_j * tau(i,j,k). `axis` must be a unit vector.
RealMatrix3 contract_assistant(const Tensor3& tau, const Vec3& axis);

/// Dealer-reconstructor state after projecting the assistant onto
/// (I + outcome * axis.sigma)/2, together with the outcome probability.
struct ConditionedPair {
  double probability = 0.0;
  ComplexMatrix rho_ac{4};
};

/// Throws NumericalError when the outcome probability is below 1e-12 (the
/// conditioned state is undefined).
ConditionedPair condition_on_assistant(const ComplexMatrix& rho,
                                       const Vec3& axis, int outcome);

}  // namespace qss3
