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

#include "qss3/fidelity.hpp"

#include <cmath>
#include <numbers>

namespace qss3 {

namespace {

constexpr int kScanNodes = 512;
constexpr int kGoldenIters = 40;
constexpr int kMaxRefineSweeps = 12;
constexpr double kObjectiveTol = 1e-9;

Vec3 from_spherical(double polar, double azimuth) {
  const double sp = std::sin(polar);
  return {sp * std::cos(azimuth), sp * std::sin(azimuth), std::cos(polar)};
}

double objective(const RealMatrix3& r, const Tensor3& tau, const Vec3& n) {
  RealMatrix3 t;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      t(i, k) = n[0] * tau(i, 0, k) + n[1] * tau(i, 1, k) + n[2] * tau(i, 2, k);
  return 0.5 * (trace_norm(r + t) + trace_norm(r - t));
}

struct AxisBest {
  double value = -1.0;
  double polar = 0.0;
  double azimuth = 0.0;
};

// Golden-section maximization of f over [lo, hi]; returns the best abscissa
// and updates `best` as a side effect.
template <typename F>
void golden_max(F f, double lo, double hi, int iters, double& x_best,
                double& f_best) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  if (fm > f_best) {
    f_best = fm;
    x_best = xm;
  }
}

Theta3Result maximize_over_axes(const RealMatrix3& r, const Tensor3& tau) {
  if (r.max_abs() < 1e-15 && tau.max_abs() < 1e-15) {
    return {0.0, {0.0, 0.0, 1.0}};
  }

  auto eval = [&](const Vec3& n) { return objective(r, tau, n); };

  // Fibonacci-sphere scan plus the coordinate axes.
  AxisBest best;
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  auto consider = [&](const Vec3& n) {
    const double v = eval(n);
    if (v > best.value) {
      best.value = v;
      best.polar = std::acos(std::clamp(n[2], -1.0, 1.0));
      best.azimuth = std::atan2(n[1], n[0]);
    }
  };
  consider({1.0, 0.0, 0.0});
  consider({0.0, 1.0, 0.0});
  consider({0.0, 0.0, 1.0});
  for (int m = 0; m < kScanNodes; ++m) {
    const double z = 1.0 - 2.0 * (m + 0.5) / kScanNodes;
    const double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double ang = golden_angle * m;
    consider({rad * std::cos(ang), rad * std::sin(ang), z});
  }

  // Coordinate-wise golden-section refinement on the spherical angles.
  double polar = best.polar, azimuth = best.azimuth, value = best.value;
  double bracket = 0.5;
  for (int sweep = 0; sweep < kMaxRefineSweeps; ++sweep) {
    const double before = value;
    golden_max(
        [&](double th) { return eval(from_spherical(th, azimuth)); },
        polar - bracket, polar + bracket, kGoldenIters, polar, value);
    golden_max(
        [&](double ph) { return eval(from_spherical(polar, ph)); },
        azimuth - bracket, azimuth + bracket, kGoldenIters, azimuth, value);
    bracket = std::max(bracket * 0.25, 1e-6);
    if (value - before <= kObjectiveTol && sweep >= 2) break;
    if (sweep + 1 == kMaxRefineSweeps && value - before > kObjectiveTol) {
      throw NumericalError(
          "theta3 axis refinement did not converge, last improvement " +
          std::to_string(value - before));
    }
  }
  if (!std::isfinite(value)) {
    throw NumericalError("theta3 objective is not finite");
  }
  return {value, from_spherical(polar, azimuth)};
}

void require_phi_zero(const AcinParams& p, const char* who) {
  if (std::abs(p.phi) > 1e-12) {
    throw std::invalid_argument(std::string(who) +
                                " is defined for phi = 0 only");
  }
}

}  // namespace

double theta2(const RealMatrix3& t) { return trace_norm(t); }

double theta2(const ComplexMatrix& rho2) { return theta2(bloch2(rho2).t); }

double tele_fidelity(const ComplexMatrix& rho2) {
  return 0.5 * (1.0 + theta2(rho2) / 3.0);
}

Theta3Result theta3(const ComplexMatrix& rho3) {
  const BlochDecomp3 d = bloch3(rho3);
  return maximize_over_axes(d.r, d.tau);
}

Theta3Result theta3(const PureState3& psi) { return theta3(density(psi)); }

double theta3_at_axis(const RealMatrix3& r_ac, const Tensor3& tau,
                      const Vec3& axis) {
  const RealMatrix3 t = contract_assistant(tau, axis);
  return 0.5 * (trace_norm(r_ac + t) + trace_norm(r_ac - t));
}

double csr_fidelity(const ComplexMatrix& rho3) {
  return 0.5 + theta3(rho3).value / 6.0;
}

double csr_fidelity(const PureState3& psi) { return csr_fidelity(density(psi)); }

double closed_theta3_ghzr(const AcinParams& p) {
  require_phi_zero(p, "closed_theta3_ghzr");
  return 4.0 * p.lambda[0] * std::max(p.lambda[2], p.lambda[4]) + 1.0;
}

double closed_norm_r(const AcinParams& p) {
  require_phi_zero(p, "closed_norm_r");
  const double l0 = p.lambda[0], l1 = p.lambda[1], l2 = p.lambda[2],
               l3 = p.lambda[3], l4 = p.lambda[4];
  const double cross = l1 * l2 + l3 * l4;
  const double gap = l0 * l0 - l1 * l1 + l4 * l4 + l2 * l2 - l3 * l3;
  return 2.0 * l0 * l2 + 2.0 * std::sqrt(l0 * l0 * l2 * l2 + cross * cross) +
         std::sqrt(4.0 * l0 * l0 * l1 * l1 + gap * gap);
}

double closed_norm_q(const AcinParams& p) {
  require_phi_zero(p, "closed_norm_q");
  const double l0 = p.lambda[0], l1 = p.lambda[1], l2 = p.lambda[2],
               l3 = p.lambda[3], l4 = p.lambda[4];
  const double cross = l1 * l3 + l2 * l4;
  const double gap = l0 * l0 - l1 * l1 + l4 * l4 + l3 * l3 - l2 * l2;
  return 2.0 * l0 * l3 + 2.0 * std::sqrt(l0 * l0 * l3 * l3 + cross * cross) +
         std::sqrt(4.0 * l0 * l0 * l1 * l1 + gap * gap);
}

double closed_theta2_ghzr(const AcinParams& p) {
  return std::max(closed_norm_r(p), closed_norm_q(p));
}

double closed_norm_r_alt(const AcinParams& p) {
  require_phi_zero(p, "closed_norm_r_alt");
  const double l0 = p.lambda[0], l1 = p.lambda[1], l2 = p.lambda[2],
               l3 = p.lambda[3], l4 = p.lambda[4];
  const double cross = l1 * l2 + l3 * l4;
  const double gap = l2 * l2 + l4 * l4 - l0 * l0 - l1 * l1 - l3 * l3;
  const double inner = 4.0 * l0 * l0 * l4 * l4 +
                       4.0 * l0 * l0 * (l2 * l2 - l3 * l3) + gap * gap;
  return 2.0 * l0 * l2 + 2.0 * std::sqrt(l0 * l0 * l2 * l2 + cross * cross) +
         std::sqrt(std::max(0.0, inner));
}

double closed_norm_q_alt(const AcinParams& p) {
  require_phi_zero(p, "closed_norm_q_alt");
  const double l0 = p.lambda[0], l1 = p.lambda[1], l2 = p.lambda[2],
               l3 = p.lambda[3], l4 = p.lambda[4];
  const double cross = l1 * l3 + l2 * l4;
  const double gap = l0 * l0 + l1 * l1 + l2 * l2 - l3 * l3 - l4 * l4;
  const double inner = 4.0 * l0 * l0 * l4 * l4 +
                       4.0 * l0 * l0 * (l3 * l3 - l2 * l2) + gap * gap;
  return 2.0 * l0 * l3 + 2.0 * std::sqrt(l0 * l0 * l3 * l3 + cross * cross) +
         std::sqrt(std::max(0.0, inner));
}

MsrClosedForms msr_closed_forms(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2.0)) {
    throw std::invalid_argument("msr angle must lie in [0, pi/2]");
  }
  const double c = std::cos(theta);
  return {c, 2.0 * c + 1.0};
}

FidelitySummary fidelity_summary(const BlochDecomp3& d) {
  FidelitySummary f;
  f.theta2_ab = trace_norm(d.q);
  f.theta2_ac = trace_norm(d.r);
  f.f_ab = 0.5 * (1.0 + f.theta2_ab / 3.0);
  f.f_ac = 0.5 * (1.0 + f.theta2_ac / 3.0);
  f.f_max = std::max(f.f_ab, f.f_ac);
  const Theta3Result t3 = maximize_over_axes(d.r, d.tau);
  f.theta3 = t3.value;
  f.best_axis = t3.axis;
  f.f_csr = 0.5 + f.theta3 / 6.0;
  f.tie_ab_ac = std::abs(f.theta2_ab - f.theta2_ac) <= kTieTol;
  return f;
}

FidelitySummary fidelity_summary(const PureState3& psi) {
  return fidelity_summary(bloch3(density(psi)));
}

}  // namespace qss3
