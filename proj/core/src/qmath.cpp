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

#include "qss3/qmath.hpp"

#include <algorithm>
#include <cmath>

namespace qss3 {

namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 4 && dim != 8) {
    throw std::invalid_argument("matrix dimension must be 2, 4 or 8, got " +
                                std::to_string(dim));
  }
}

void check_finite(const RealMatrix3& m) {
  for (double v : m.e) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("non-finite entry in 3x3 matrix");
    }
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) { check_dim(dim); }

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(c, r));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (int r = 0; r < dim_; ++r)
    for (int c = r; c < dim_; ++c)
      worst = std::max(worst,
                       std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < dim_ * dim_; ++i) e_[i] += o.e_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < dim_ * dim_; ++i) e_[i] -= o.e_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex z) {
  for (int i = 0; i < dim_ * dim_; ++i) e_[i] *= z;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
  const int n = a.dim_;
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const Complex arc = a(r, k);
      if (arc == 0.0) continue;
      for (int c = 0; c < n; ++c) out(r, c) += arc * b(k, c);
    }
  return out;
}

RealMatrix3 RealMatrix3::transposed() const {
  RealMatrix3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
  return t;
}

double RealMatrix3::max_abs() const {
  double m = 0.0;
  for (double v : e) m = std::max(m, std::abs(v));
  return m;
}

RealMatrix3& RealMatrix3::operator+=(const RealMatrix3& o) {
  for (int i = 0; i < 9; ++i) e[i] += o.e[i];
  return *this;
}

RealMatrix3& RealMatrix3::operator-=(const RealMatrix3& o) {
  for (int i = 0; i < 9; ++i) e[i] -= o.e[i];
  return *this;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  if (na * nb > 8) {
    throw std::invalid_argument("kron product dimension " +
                                std::to_string(na * nb) + " exceeds 8");
  }
  ComplexMatrix out(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == 0.0) continue;
      for (int r = 0; r < nb; ++r)
        for (int c = 0; c < nb; ++c)
          out(i * nb + r, j * nb + c) = aij * b(r, c);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<int>& keep,
                            const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  int total = 1;
  for (int d : dims) total *= d;
  if (total != rho.dim()) {
    throw std::invalid_argument("subsystem dims do not match matrix dim");
  }
  if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw std::invalid_argument("keep index out of range");
    if (kept[k]) throw std::invalid_argument("duplicate keep index");
    kept[k] = true;
  }
  if (rho.hermiticity_defect() > kHermTol) {
    throw std::invalid_argument("partial_trace: input is not Hermitian");
  }
  if (std::abs(rho.trace() - 1.0) > kTraceTol) {
    throw std::invalid_argument("partial_trace: input trace is not 1");
  }

  // Strides in tensor order (subsystem 0 is the most significant factor).
  std::vector<int> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  std::vector<int> keep_idx, trace_idx;
  for (int i = 0; i < n; ++i) (kept[i] ? keep_idx : trace_idx).push_back(i);

  int kd = 1, td = 1;
  for (int i : keep_idx) kd *= dims[i];
  for (int i : trace_idx) td *= dims[i];

  auto offset = [&](const std::vector<int>& subsys, int packed) {
    int off = 0;
    for (int i = static_cast<int>(subsys.size()) - 1; i >= 0; --i) {
      const int d = dims[subsys[i]];
      off += (packed % d) * stride[subsys[i]];
      packed /= d;
    }
    return off;
  };

  ComplexMatrix out(kd);
  for (int r = 0; r < kd; ++r) {
    const int ro = offset(keep_idx, r);
    for (int c = 0; c < kd; ++c) {
      const int co = offset(keep_idx, c);
      Complex sum = 0.0;
      for (int t = 0; t < td; ++t) {
        const int to = offset(trace_idx, t);
        sum += rho(ro + to, co + to);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

namespace {

// One cyclic Jacobi sweep over a Hermitian matrix held in a flat buffer.
// Rotations zero the (p,q) element; diagonal stays real.
template <typename Get, typename Set>
void jacobi_rotate(int n, Get at, Set put, int p, int q) {
  const Complex apq = at(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex u = apq / mag;  // phase of the pivot
  const double app = at(p, p).real();
  const double aqq = at(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // J = D * G with D = diag(1, conj(u)) in the (p,q) plane and G the real
  // Givens rotation; apply A <- J^dag A J.
  for (int i = 0; i < n; ++i) {
    const Complex aip = at(i, p), aiq = at(i, q);
    put(i, p, c * aip - s * std::conj(u) * aiq);
    put(i, q, s * aip + c * std::conj(u) * aiq);
  }
  for (int j = 0; j < n; ++j) {
    const Complex apj = at(p, j), aqj = at(q, j);
    put(p, j, c * apj - s * u * aqj);
    put(q, j, s * apj + c * u * aqj);
  }
  put(p, q, 0.0);
  put(q, p, 0.0);
  put(p, p, Complex(at(p, p).real(), 0.0));
  put(q, q, Complex(at(q, q).real(), 0.0));
}

double off_diagonal_frobenius(int n, const std::vector<Complex>& a) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) sum += std::norm(a[i * n + j]);
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  const int n = h.dim();
  if (h.hermiticity_defect() > kHermTol) {
    throw std::invalid_argument(
        "hermitian_eigenvalues: input is not Hermitian (defect " +
        std::to_string(h.hermiticity_defect()) + ")");
  }
  std::vector<Complex> a(n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r * n + c] = h(r, c);

  auto at = [&](int r, int c) { return a[r * n + c]; };
  auto put = [&](int r, int c, Complex v) { a[r * n + c] = v; };

  double off = off_diagonal_frobenius(n, a);
  int sweeps = 0;
  while (off > kJacobiOffTol) {
    if (++sweeps > kJacobiMaxSweeps) {
      throw NumericalError("Jacobi eigensolver did not converge, residual " +
                           std::to_string(off));
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(n, at, put, p, q);
    off = off_diagonal_frobenius(n, a);
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i * n + i].real();
  std::sort(eig.rbegin(), eig.rend());
  return eig;
}

std::array<double, 3> eigenvalues_sym3(const RealMatrix3& s) {
  check_finite(s);
  // Real symmetric Jacobi on the symmetric part.
  double a[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = 0.5 * (s(i, j) + s(j, i));

  auto off = [&]() {
    return std::sqrt(2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] +
                            a[1][2] * a[1][2]));
  };
  int sweeps = 0;
  while (off() > kJacobiOffTol) {
    if (++sweeps > kJacobiMaxSweeps) {
      throw NumericalError("sym3 Jacobi did not converge, residual " +
                           std::to_string(off()));
    }
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double tau = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        for (int i = 0; i < 3; ++i) {
          const double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - sn * aiq;
          a[i][q] = sn * aip + c * aiq;
        }
        for (int j = 0; j < 3; ++j) {
          const double apj = a[p][j], aqj = a[q][j];
          a[p][j] = c * apj - sn * aqj;
          a[q][j] = sn * apj + c * aqj;
        }
        a[p][q] = a[q][p] = 0.0;
      }
  }
  std::array<double, 3> eig{a[0][0], a[1][1], a[2][2]};
  std::sort(eig.rbegin(), eig.rend());
  return eig;
}

std::array<double, 3> singular_values(const RealMatrix3& m) {
  check_finite(m);
  RealMatrix3 mtm;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 3; ++k) sum += m(k, i) * m(k, j);
      mtm(i, j) = sum;
    }
  std::array<double, 3> eig = eigenvalues_sym3(mtm);
  std::array<double, 3> sv{};
  for (int i = 0; i < 3; ++i) {
    double v = eig[i];
    if (v < 0.0) {
      if (v < -1e-12) {
        throw NumericalError("singular_values: M^T M eigenvalue " +
                             std::to_string(v) + " below clamp window");
      }
      v = 0.0;
    }
    sv[i] = std::sqrt(v);
  }
  return sv;
}

double trace_norm(const RealMatrix3& m) {
  const auto sv = singular_values(m);
  return sv[0] + sv[1] + sv[2];
}

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
  return {v[0] / n, v[1] / n, v[2] / n};
}

}  // namespace qss3
