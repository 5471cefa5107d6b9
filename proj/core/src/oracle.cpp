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

#include "qss3/oracle.hpp"

#include <cmath>
#include <numbers>

#include "qss3/fidelity.hpp"

namespace qss3 {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

// Bell basis on (input, Alice-half): coefficients B[k][i][a].
constexpr double kBell[4][2][2] = {
    {{kInvSqrt2, 0.0}, {0.0, kInvSqrt2}},    // Phi+
    {{kInvSqrt2, 0.0}, {0.0, -kInvSqrt2}},   // Phi-
    {{0.0, kInvSqrt2}, {kInvSqrt2, 0.0}},    // Psi+
    {{0.0, kInvSqrt2}, {-kInvSqrt2, 0.0}},   // Psi-
};

struct Qubit {
  Complex a0, a1;
};

// Bob's unnormalized conditioned 2x2 for Bell outcome k, with the Pauli
// correction (I, Z, X, XZ) folded in as an index/sign shuffle.
struct Branch {
  Complex n[2][2];
};

void branch_state(const ComplexMatrix& rho, const Qubit& psi, int k,
                  Branch& out) {
  Complex w[2];
  for (int a = 0; a < 2; ++a) {
    w[a] = kBell[k][0][a] * psi.a0 + kBell[k][1][a] * psi.a1;
  }
  Complex n[2][2];
  for (int b = 0; b < 2; ++b)
    for (int b2 = 0; b2 < 2; ++b2) {
      Complex sum = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int a2 = 0; a2 < 2; ++a2) {
          sum += w[a] * std::conj(w[a2]) * rho(a * 2 + b, a2 * 2 + b2);
        }
      n[b][b2] = sum;
    }
  // Corrections: k=0 identity, k=1 Z, k=2 X, k=3 XZ.
  const bool flip = (k >= 2);
  const bool sign = (k == 1 || k == 3);
  for (int b = 0; b < 2; ++b)
    for (int b2 = 0; b2 < 2; ++b2) {
      const int sb = flip ? 1 - b : b;
      const int sb2 = flip ? 1 - b2 : b2;
      double s = 1.0;
      if (sign && (sb ^ sb2)) s = -1.0;
      out.n[b][b2] = s * n[sb][sb2];
    }
}

double overlap(const Qubit& psi, const Branch& br) {
  const Complex v0 = br.n[0][0] * psi.a0 + br.n[0][1] * psi.a1;
  const Complex v1 = br.n[1][0] * psi.a0 + br.n[1][1] * psi.a1;
  return (std::conj(psi.a0) * v0 + std::conj(psi.a1) * v1).real();
}

// Exact Bloch-sphere average of the protocol fidelity: the per-input fidelity
// is quadratic in the input Bloch vector, so averaging the six axis states is
// exact.
double protocol_average(const ComplexMatrix& rho) {
  static const Qubit inputs[6] = {
      {1.0, 0.0},
      {0.0, 1.0},
      {kInvSqrt2, kInvSqrt2},
      {kInvSqrt2, -kInvSqrt2},
      {kInvSqrt2, Complex(0.0, kInvSqrt2)},
      {kInvSqrt2, Complex(0.0, -kInvSqrt2)},
  };
  double total = 0.0;
  Branch br;
  for (const Qubit& psi : inputs) {
    for (int k = 0; k < 4; ++k) {
      branch_state(rho, psi, k, br);
      total += overlap(psi, br);
    }
  }
  return total / 6.0;
}

ComplexMatrix su2(double alpha, double beta, double gamma) {
  ComplexMatrix u(2);
  const double cb = std::cos(beta / 2.0), sb = std::sin(beta / 2.0);
  const Complex em(std::cos((alpha + gamma) / 2.0),
                   -std::sin((alpha + gamma) / 2.0));
  const Complex ed(std::cos((alpha - gamma) / 2.0),
                   -std::sin((alpha - gamma) / 2.0));
  u(0, 0) = em * cb;
  u(0, 1) = -ed * sb;
  u(1, 0) = std::conj(ed) * sb;
  u(1, 1) = std::conj(em) * cb;
  return u;
}

ComplexMatrix rotated_resource(const ComplexMatrix& rho,
                               const std::array<double, 6>& ang) {
  const ComplexMatrix u = kron(su2(ang[0], ang[1], ang[2]),
                               su2(ang[3], ang[4], ang[5]));
  return u * rho * u.dagger();
}

struct RotationSearch {
  std::array<double, 6> angles{};
  double value = -1.0;
};

// Multistart coordinate search over both parties' Euler angles, maximizing
// the exact protocol average. Deterministic.
RotationSearch optimize_rotations(const ComplexMatrix& rho) {
  auto eval = [&](const std::array<double, 6>& ang) {
    return protocol_average(rotated_resource(rho, ang));
  };

  constexpr int kStarts = 16;
  SplitMix64 rng(0x0badc0ffee5eed11ull);
  RotationSearch best;
  for (int s = 0; s < kStarts; ++s) {
    std::array<double, 6> ang{};
    if (s > 0) {
      for (double& a : ang) a = rng.next_double() * 2.0 * std::numbers::pi;
    }
    double value = eval(ang);
    double bracket = 0.9;
    for (int sweep = 0; sweep < 6; ++sweep) {
      for (int c = 0; c < 6; ++c) {
        constexpr double inv_phi = 0.6180339887498949;
        double lo = ang[c] - bracket, hi = ang[c] + bracket;
        auto f = [&](double x) {
          std::array<double, 6> probe = ang;
          probe[c] = x;
          return eval(probe);
        };
        double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
        double f1 = f(x1), f2 = f(x2);
        for (int it = 0; it < 32; ++it) {
          if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
          } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
          }
        }
        const double xm = 0.5 * (lo + hi);
        const double fm = f(xm);
        if (fm > value) {
          value = fm;
          ang[c] = xm;
        }
      }
      bracket *= 0.4;
    }
    if (value > best.value) {
      best.value = value;
      best.angles = ang;
    }
  }
  return best;
}

void require_two_qubit_density(const ComplexMatrix& rho, const char* who) {
  if (rho.dim() != 4) {
    throw std::invalid_argument(std::string(who) + ": expected a 4x4 matrix");
  }
  if (rho.hermiticity_defect() > kHermTol ||
      std::abs(rho.trace() - 1.0) > kTraceTol) {
    throw std::invalid_argument(std::string(who) +
                                ": input is not a density matrix");
  }
}

}  // namespace

double optimized_protocol_fidelity(const ComplexMatrix& rho2) {
  require_two_qubit_density(rho2, "optimized_protocol_fidelity");
  return optimize_rotations(rho2).value;
}

McEstimate mc_teleport_fidelity(const ComplexMatrix& rho2,
                                const McConfig& cfg) {
  require_two_qubit_density(rho2, "mc_teleport_fidelity");
  if (cfg.samples < 1) {
    throw std::invalid_argument("mc_teleport_fidelity: samples must be >= 1");
  }
  const RotationSearch rot = optimize_rotations(rho2);
  const ComplexMatrix rho = rotated_resource(rho2, rot.angles);

  // Reduced state of Alice's half: outcome probabilities only need this.
  Complex g[2][2];
  for (int a = 0; a < 2; ++a)
    for (int a2 = 0; a2 < 2; ++a2) {
      g[a][a2] = rho(a * 2 + 0, a2 * 2 + 0) + rho(a * 2 + 1, a2 * 2 + 1);
    }

  SplitMix64 rng(cfg.seed);
  double sum = 0.0, sum_sq = 0.0;
  Branch br;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    // Bloch-uniform pure input.
    const double z = 1.0 - 2.0 * rng.next_double();
    const double phi = 2.0 * std::numbers::pi * rng.next_double();
    Qubit psi{std::sqrt(0.5 * (1.0 + z)),
              Complex(std::cos(phi), std::sin(phi)) *
                  std::sqrt(0.5 * (1.0 - z))};

    // Outcome probabilities p_k = sum_{a,a'} w_a conj(w_a') g[a][a'].
    double p[4];
    for (int k = 0; k < 4; ++k) {
      Complex w[2];
      for (int a = 0; a < 2; ++a) {
        w[a] = kBell[k][0][a] * psi.a0 + kBell[k][1][a] * psi.a1;
      }
      Complex pk = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int a2 = 0; a2 < 2; ++a2) {
          pk += w[a] * std::conj(w[a2]) * g[a][a2];
        }
      p[k] = pk.real();
    }

    int k = 3;
    double u = rng.next_double();
    for (int j = 0; j < 3; ++j) {
      if (u < p[j]) {
        k = j;
        break;
      }
      u -= p[j];
    }

    branch_state(rho, psi, k, br);
    const double pk = (br.n[0][0] + br.n[1][1]).real();
    const double f = pk > 1e-300 ? overlap(psi, br) / pk : 0.0;
    sum += f;
    sum_sq += f * f;
  }

  McEstimate est;
  const double n = static_cast<double>(cfg.samples);
  est.mean = sum / n;
  if (cfg.samples > 1) {
    const double var =
        std::max(0.0, (sum_sq - n * est.mean * est.mean) / (n - 1.0));
    est.std_error = std::sqrt(var / n);
  }
  return est;
}

double csr_conditioned_fidelity(const PureState3& psi, const Vec3& axis) {
  if (std::abs(norm(axis) - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "csr_conditioned_fidelity: axis is not a unit vector");
  }
  const ComplexMatrix rho = density(psi);
  double total = 0.0;
  for (int outcome : {+1, -1}) {
    // Cheap probability pre-check so degenerate branches are skipped.
    double p = 0.0;
    const double o = static_cast<double>(outcome);
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c) {
        const Complex d0 = rho(a * 4 + 0 * 2 + c, a * 4 + 0 * 2 + c);
        const Complex d1 = rho(a * 4 + 1 * 2 + c, a * 4 + 1 * 2 + c);
        const Complex x = rho(a * 4 + 0 * 2 + c, a * 4 + 1 * 2 + c);
        p += 0.5 * (d0.real() + d1.real());
        p += 0.5 * o *
             (axis[2] * (d0.real() - d1.real()) +
              2.0 * (axis[0] * x.real() - axis[1] * x.imag()));
      }
    if (p < 1e-12) continue;
    const ConditionedPair cond = condition_on_assistant(rho, axis, outcome);
    total += cond.probability * tele_fidelity(cond.rho_ac);
  }
  return total;
}

namespace {

Vec3 axis_from_spherical(double polar, double azimuth) {
  const double sp = std::sin(polar);
  return {sp * std::cos(azimuth), sp * std::sin(azimuth), std::cos(polar)};
}

}  // namespace

AxisOptimum max_conditioned_fidelity(const PureState3& psi) {
  auto eval = [&](const Vec3& n) { return csr_conditioned_fidelity(psi, n); };

  AxisOptimum best;
  double polar = 0.0, azimuth = 0.0;
  auto consider = [&](const Vec3& n) {
    const double v = eval(n);
    if (v > best.value) {
      best.value = v;
      best.axis = n;
      polar = std::acos(std::clamp(n[2], -1.0, 1.0));
      azimuth = std::atan2(n[1], n[0]);
    }
  };
  consider({1.0, 0.0, 0.0});
  consider({0.0, 1.0, 0.0});
  consider({0.0, 0.0, 1.0});
  constexpr int kScan = 512;
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int m = 0; m < kScan; ++m) {
    const double z = 1.0 - 2.0 * (m + 0.5) / kScan;
    const double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double ang = golden_angle * m;
    consider({rad * std::cos(ang), rad * std::sin(ang), z});
  }

  double bracket = 0.5;
  for (int sweep = 0; sweep < 10; ++sweep) {
    for (int c = 0; c < 2; ++c) {
      constexpr double inv_phi = 0.6180339887498949;
      double lo = (c == 0 ? polar : azimuth) - bracket;
      double hi = (c == 0 ? polar : azimuth) + bracket;
      auto f = [&](double x) {
        return eval(c == 0 ? axis_from_spherical(x, azimuth)
                           : axis_from_spherical(polar, x));
      };
      double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
      double f1 = f(x1), f2 = f(x2);
      for (int it = 0; it < 40; ++it) {
        if (f1 < f2) {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + inv_phi * (hi - lo);
          f2 = f(x2);
        } else {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - inv_phi * (hi - lo);
          f1 = f(x1);
        }
      }
      const double xm = 0.5 * (lo + hi);
      const double fm = f(xm);
      if (fm > best.value) {
        best.value = fm;
        (c == 0 ? polar : azimuth) = xm;
        best.axis = axis_from_spherical(polar, azimuth);
      }
    }
    bracket = std::max(bracket * 0.25, 1e-6);
  }
  return best;
}

}  // namespace qss3
