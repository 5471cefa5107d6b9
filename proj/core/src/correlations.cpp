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

#include "qss3/correlations.hpp"

#include <cmath>

namespace qss3 {

namespace {

// Column action of a Pauli: sigma |col> = val[col] |row[col]>. Index 0 is I,
// 1..3 are x, y, z. Lets every expectation run over the sparse structure.
struct PauliAction {
  std::array<int, 2> row;
  std::array<Complex, 2> val;
};

constexpr Complex kI(0.0, 1.0);

const std::array<PauliAction, 4>& pauli_actions() {
  static const std::array<PauliAction, 4> acts{{
      {{0, 1}, {1.0, 1.0}},    // I
      {{1, 0}, {1.0, 1.0}},    // X
      {{1, 0}, {kI, -kI}},     // Y
      {{0, 1}, {1.0, -1.0}},   // Z
  }};
  return acts;
}

void require_density(const ComplexMatrix& rho, int dim, const char* who) {
  if (rho.dim() != dim) {
    throw std::invalid_argument(std::string(who) + ": expected dimension " +
                                std::to_string(dim));
  }
  if (rho.hermiticity_defect() > kHermTol) {
    throw std::invalid_argument(std::string(who) +
                                ": input is not Hermitian within tolerance");
  }
  if (std::abs(rho.trace() - 1.0) > kTraceTol) {
    throw std::invalid_argument(std::string(who) + ": input trace is not 1");
  }
}

double real_expectation(Complex v, const char* who) {
  if (std::abs(v.imag()) > kImagTol) {
    throw std::invalid_argument(
        std::string(who) + ": Pauli expectation has imaginary residue " +
        std::to_string(v.imag()));
  }
  return v.real();
}

// Tr(rho (P_i x P_j)) over the sparse Pauli action.
Complex pair_expectation(const ComplexMatrix& rho, int i, int j) {
  const auto& acts = pauli_actions();
  Complex sum = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const int col = a * 2 + b;
      const int row = acts[i].row[a] * 2 + acts[j].row[b];
      sum += acts[i].val[a] * acts[j].val[b] * rho(col, row);
    }
  return sum;
}

// Tr(rho (P_i x P_j x P_k)).
Complex triple_expectation(const ComplexMatrix& rho, int i, int j, int k) {
  const auto& acts = pauli_actions();
  Complex sum = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const int col = a * 4 + b * 2 + c;
        const int row =
            acts[i].row[a] * 4 + acts[j].row[b] * 2 + acts[k].row[c];
        sum += acts[i].val[a] * acts[j].val[b] * acts[k].val[c] * rho(col, row);
      }
  return sum;
}

}  // namespace

ComplexMatrix pauli_matrix(int i) {
  if (i < 0 || i > 3) throw std::invalid_argument("pauli index must be 0..3");
  ComplexMatrix m(2);
  const auto& act = pauli_actions()[i];
  m(act.row[0], 0) = act.val[0];
  m(act.row[1], 1) = act.val[1];
  return m;
}

double Tensor3::max_abs() const {
  double m = 0.0;
  for (double v : e) m = std::max(m, std::abs(v));
  return m;
}

BlochDecomp2 bloch2(const ComplexMatrix& rho) {
  require_density(rho, 4, "bloch2");
  BlochDecomp2 d;
  for (int i = 1; i <= 3; ++i) {
    d.r[i - 1] = real_expectation(pair_expectation(rho, i, 0), "bloch2");
    d.s[i - 1] = real_expectation(pair_expectation(rho, 0, i), "bloch2");
    for (int j = 1; j <= 3; ++j) {
      d.t(i - 1, j - 1) =
          real_expectation(pair_expectation(rho, i, j), "bloch2");
    }
  }
  return d;
}

BlochDecomp3 bloch3(const ComplexMatrix& rho) {
  require_density(rho, 8, "bloch3");
  BlochDecomp3 d;
  for (int i = 1; i <= 3; ++i) {
    d.a[i - 1] = real_expectation(triple_expectation(rho, i, 0, 0), "bloch3");
    d.b[i - 1] = real_expectation(triple_expectation(rho, 0, i, 0), "bloch3");
    d.c[i - 1] = real_expectation(triple_expectation(rho, 0, 0, i), "bloch3");
    for (int j = 1; j <= 3; ++j) {
      d.q(i - 1, j - 1) =
          real_expectation(triple_expectation(rho, i, j, 0), "bloch3");
      d.r(i - 1, j - 1) =
          real_expectation(triple_expectation(rho, i, 0, j), "bloch3");
      d.s(i - 1, j - 1) =
          real_expectation(triple_expectation(rho, 0, i, j), "bloch3");
      for (int k = 1; k <= 3; ++k) {
        d.tau(i - 1, j - 1, k - 1) =
            real_expectation(triple_expectation(rho, i, j, k), "bloch3");
      }
    }
  }
  return d;
}

ComplexMatrix reconstruct2(const BlochDecomp2& d) {
  ComplexMatrix rho = ComplexMatrix::identity(4);
  for (int i = 1; i <= 3; ++i) {
    rho += Complex(d.r[i - 1]) * kron(pauli_matrix(i), pauli_matrix(0));
    rho += Complex(d.s[i - 1]) * kron(pauli_matrix(0), pauli_matrix(i));
    for (int j = 1; j <= 3; ++j) {
      rho += Complex(d.t(i - 1, j - 1)) *
             kron(pauli_matrix(i), pauli_matrix(j));
    }
  }
  rho *= 0.25;
  return rho;
}

ComplexMatrix reconstruct3(const BlochDecomp3& d) {
  ComplexMatrix rho = ComplexMatrix::identity(8);
  auto term = [](int i, int j, int k) {
    return kron(kron(pauli_matrix(i), pauli_matrix(j)), pauli_matrix(k));
  };
  for (int i = 1; i <= 3; ++i) {
    rho += Complex(d.a[i - 1]) * term(i, 0, 0);
    rho += Complex(d.b[i - 1]) * term(0, i, 0);
    rho += Complex(d.c[i - 1]) * term(0, 0, i);
    for (int j = 1; j <= 3; ++j) {
      rho += Complex(d.q(i - 1, j - 1)) * term(i, j, 0);
      rho += Complex(d.r(i - 1, j - 1)) * term(i, 0, j);
      rho += Complex(d.s(i - 1, j - 1)) * term(0, i, j);
      for (int k = 1; k <= 3; ++k) {
        rho += Complex(d.tau(i - 1, j - 1, k - 1)) * term(i, j, k);
      }
    }
  }
  rho *= 0.125;
  return rho;
}

RealMatrix3 contract_assistant(const Tensor3& tau, const Vec3& axis) {
  if (std::abs(norm(axis) - 1.0) > 1e-9) {
    throw std::invalid_argument("contract_assistant: axis is not a unit vector");
  }
  RealMatrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      out(i, k) = axis[0] * tau(i, 0, k) + axis[1] * tau(i, 1, k) +
                  axis[2] * tau(i, 2, k);
    }
  return out;
}

ConditionedPair condition_on_assistant(const ComplexMatrix& rho,
                                       const Vec3& axis, int outcome) {
  require_density(rho, 8, "condition_on_assistant");
  if (outcome != 1 && outcome != -1) {
    throw std::invalid_argument("outcome must be +1 or -1");
  }
  if (std::abs(norm(axis) - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "condition_on_assistant: axis is not a unit vector");
  }

  // Projector (I + outcome * axis.sigma)/2 on the assistant qubit.
  const double o = static_cast<double>(outcome);
  Complex p[2][2];
  p[0][0] = 0.5 * (1.0 + o * axis[2]);
  p[1][1] = 0.5 * (1.0 - o * axis[2]);
  p[0][1] = 0.5 * o * Complex(axis[0], -axis[1]);
  p[1][0] = 0.5 * o * Complex(axis[0], axis[1]);

  // Tr_B[(I x P x I) rho (I x P x I)] contracts to
  // sum_{b,b'} P[b'][b] rho[(a,b,c),(a',b',c')] because P is idempotent.
  ComplexMatrix un(4);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int c2 = 0; c2 < 2; ++c2) {
          Complex sum = 0.0;
          for (int b = 0; b < 2; ++b)
            for (int b2 = 0; b2 < 2; ++b2) {
              sum += p[b2][b] * rho(a * 4 + b * 2 + c, a2 * 4 + b2 * 2 + c2);
            }
          un(a * 2 + c, a2 * 2 + c2) = sum;
        }

  ConditionedPair out;
  out.probability = un.trace().real();
  if (out.probability < 1e-12) {
    throw NumericalError(
        "condition_on_assistant: outcome probability below 1e-12, "
        "conditioned state undefined");
  }
  un *= Complex(1.0 / out.probability);
  out.rho_ac = un;
  return out;
}

}  // namespace qss3
