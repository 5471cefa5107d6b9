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

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qss3 {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

// Centralized numerical tolerances. Tests and the acceptance suite reference
// these constants rather than repeating literals.
inline constexpr double kHermTol = 1e-10;       // max |A - A^dag| for Hermitian input
inline constexpr double kEigTol = 1e-11;        // eigenvalue residual bound
inline constexpr double kPosTol = 1e-10;        // PSD slack for density matrices
inline constexpr double kNormTol = 1e-10;       // state-norm drift on construction
inline constexpr double kTraceTol = 1e-9;       // |Tr(rho) - 1| for density matrices
inline constexpr double kJacobiOffTol = 1e-13;  // off-diagonal Frobenius threshold
inline constexpr int kJacobiMaxSweeps = 100;

/// Thrown when an iterative kernel fails to converge; the message carries the
/// final residual.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense square complex matrix of dimension 2, 4 or 8 (one to three qubits).
/// Row-major, value semantics, fixed storage.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim);
  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }
  Complex& operator()(int r, int c) { return e_[r * dim_ + c]; }
  const Complex& operator()(int r, int c) const { return e_[r * dim_ + c]; }

  Complex trace() const;
  ComplexMatrix dagger() const;
  /// max_ij |A[i][j] - conj(A[j][i])|
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kHermTol) const {
    return hermiticity_defect() <= tol;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex z);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(Complex z, ComplexMatrix a) { return a *= z; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  int dim_;
  std::array<Complex, 64> e_{};
};

/// 3x3 real matrix holding Pauli correlation data.
struct RealMatrix3 {
  std::array<double, 9> e{};

  double& operator()(int i, int j) { return e[i * 3 + j]; }
  double operator()(int i, int j) const { return e[i * 3 + j]; }

  static RealMatrix3 diag(double a, double b, double c) {
    RealMatrix3 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
  }
  RealMatrix3 transposed() const;
  double max_abs() const;

  RealMatrix3& operator+=(const RealMatrix3& o);
  RealMatrix3& operator-=(const RealMatrix3& o);
  friend RealMatrix3 operator+(RealMatrix3 a, const RealMatrix3& b) {
    return a += b;
  }
  friend RealMatrix3 operator-(RealMatrix3 a, const RealMatrix3& b) {
    return a -= b;
  }
};

/// Kronecker product; the product dimension must not exceed 8.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced density matrix over the subsystems listed in `keep` (ascending,
/// nonempty). `dims` are the subsystem dimensions in tensor order; their
/// product must equal rho.dim(). Input must be Hermitian with unit trace.
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<int>& keep,
                            const std::vector<int>& dims);

/// Eigenvalues of a Hermitian matrix, descending. Cyclic Jacobi with complex
/// rotations; throws NumericalError if the off-diagonal mass has not dropped
/// below kJacobiOffTol after kJacobiMaxSweeps sweeps.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Eigenvalues of a symmetric 3x3 real matrix, descending.
std::array<double, 3> eigenvalues_sym3(const RealMatrix3& s);

/// Singular values, descending. Computed from the spectrum of M^T M; tiny
/// negative eigenvalues in [-1e-12, 0) are clamped to zero.
std::array<double, 3> singular_values(const RealMatrix3& m);

/// Trace norm: sum of singular values.
double trace_norm(const RealMatrix3& m);

// Small Vec3 helpers used across the analysis kernels.
double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
Vec3 normalized(const Vec3& v);

}  // namespace qss3
