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

#include "qss3/bell.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace qss3 {

namespace {

void require_phi_zero(const AcinParams& p, const char* who) {
  if (std::abs(p.phi) > 1e-12) {
    throw std::invalid_argument(std::string(who) +
                                " is defined for phi = 0 only");
  }
}

Vec3 transpose_apply(const RealMatrix3& t, const Vec3& v) {
  return {t(0, 0) * v[0] + t(1, 0) * v[1] + t(2, 0) * v[2],
          t(0, 1) * v[0] + t(1, 1) * v[1] + t(2, 1) * v[2],
          t(0, 2) * v[0] + t(1, 2) * v[1] + t(2, 2) * v[2]};
}

std::vector<Vec3> fibonacci_sphere(int n) {
  std::vector<Vec3> nodes;
  nodes.reserve(n);
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int m = 0; m < n; ++m) {
    const double z = 1.0 - 2.0 * (m + 0.5) / n;
    const double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double ang = golden_angle * m;
    nodes.push_back({rad * std::cos(ang), rad * std::sin(ang), z});
  }
  return nodes;
}

Vec3 from_spherical(double polar, double azimuth) {
  const double sp = std::sin(polar);
  return {sp * std::cos(azimuth), sp * std::sin(azimuth), std::cos(polar)};
}

}  // namespace

double m_value(const RealMatrix3& t) {
  RealMatrix3 ttt;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 3; ++k) sum += t(k, i) * t(k, j);
      ttt(i, j) = sum;
    }
  const auto eig = eigenvalues_sym3(ttt);
  return eig[0] + eig[1];
}

double m_value(const ComplexMatrix& rho2) { return m_value(bloch2(rho2).t); }

double s_value(const ComplexMatrix& rho2) {
  return 2.0 * std::sqrt(std::max(0.0, m_value(rho2)));
}

BellSummary bell_summary(const BlochDecomp3& d) {
  BellSummary b;
  b.m_ab = m_value(d.q);
  b.m_ac = m_value(d.r);
  b.s_ab = 2.0 * std::sqrt(std::max(0.0, b.m_ab));
  b.s_ac = 2.0 * std::sqrt(std::max(0.0, b.m_ac));
  b.s_max = std::max(b.s_ab, b.s_ac);
  return b;
}

BellSummary bell_summary(const PureState3& psi) {
  return bell_summary(bloch3(density(psi)));
}

double s_max(const PureState3& psi) { return bell_summary(psi).s_max; }

double closed_m_ghzr(const AcinParams& p) {
  require_phi_zero(p, "closed_m_ghzr");
  const double l0 = p.lambda[0], l1 = p.lambda[1], l2 = p.lambda[2],
               l3 = p.lambda[3], l4 = p.lambda[4];
  const double cross = l1 * l4 + l2 * l3;
  return 1.0 - 4.0 * cross * cross +
         4.0 * l0 * l0 * std::abs(l2 * l2 - l3 * l3);
}

std::array<double, 3> closed_rtr_eigenvalues(const AcinParams& p) {
  require_phi_zero(p, "closed_rtr_eigenvalues");
  const double l0 = p.lambda[0], l1 = p.lambda[1], l2 = p.lambda[2],
               l3 = p.lambda[3], l4 = p.lambda[4];
  const double base = 4.0 * l0 * l0 * l2 * l2;
  const double cross = l1 * l2 + l3 * l4;
  const double gap = l0 * l0 + l1 * l1 + l3 * l3 - l2 * l2 - l4 * l4;
  return {base, base + 4.0 * cross * cross,
          base + 4.0 * l0 * l0 * (l4 * l4 - l3 * l3) + gap * gap};
}

std::array<double, 3> closed_qtq_eigenvalues(const AcinParams& p) {
  require_phi_zero(p, "closed_qtq_eigenvalues");
  const double l0 = p.lambda[0], l1 = p.lambda[1], l2 = p.lambda[2],
               l3 = p.lambda[3], l4 = p.lambda[4];
  const double base = 4.0 * l0 * l0 * l3 * l3;
  const double cross = l1 * l3 + l2 * l4;
  const double gap = l0 * l0 + l1 * l1 + l2 * l2 - l3 * l3 - l4 * l4;
  return {base, base + 4.0 * cross * cross,
          base + 4.0 * l0 * l0 * (l4 * l4 - l2 * l2) + gap * gap};
}

ChshResult chsh_optimize(const ComplexMatrix& rho2) {
  const RealMatrix3 t = bloch2(rho2).t;

  // S(a, a') = |T^T (a + a')| + |T^T (a - a')| after the closed-form inner step.
  auto pair_value = [&](const Vec3& ta, const Vec3& tap) {
    const Vec3 u{ta[0] + tap[0], ta[1] + tap[1], ta[2] + tap[2]};
    const Vec3 v{ta[0] - tap[0], ta[1] - tap[1], ta[2] - tap[2]};
    return norm(u) + norm(v);
  };

  constexpr int kGrid = 256;
  const auto nodes = fibonacci_sphere(kGrid);
  std::vector<Vec3> t_nodes(kGrid);
  for (int i = 0; i < kGrid; ++i) t_nodes[i] = transpose_apply(t, nodes[i]);

  struct Cand {
    double value;
    int i, j;
  };
  std::array<Cand, 4> top{};
  top.fill({-1.0, 0, 0});
  for (int i = 0; i < kGrid; ++i)
    for (int j = 0; j < kGrid; ++j) {
      const double v = pair_value(t_nodes[i], t_nodes[j]);
      if (v > top[3].value) {
        top[3] = {v, i, j};
        for (int k = 3; k > 0 && top[k].value > top[k - 1].value; --k) {
          std::swap(top[k], top[k - 1]);
        }
      }
    }

  auto eval_angles = [&](const std::array<double, 4>& ang) {
    const Vec3 a = from_spherical(ang[0], ang[1]);
    const Vec3 ap = from_spherical(ang[2], ang[3]);
    return pair_value(transpose_apply(t, a), transpose_apply(t, ap));
  };

  double best_value = -1.0;
  std::array<double, 4> best_angles{};
  for (const Cand& cand : top) {
    const Vec3& a = nodes[cand.i];
    const Vec3& ap = nodes[cand.j];
    std::array<double, 4> ang{std::acos(std::clamp(a[2], -1.0, 1.0)),
                              std::atan2(a[1], a[0]),
                              std::acos(std::clamp(ap[2], -1.0, 1.0)),
                              std::atan2(ap[1], ap[0])};
    double value = cand.value;
    double bracket = 0.4;
    for (int sweep = 0; sweep < 8; ++sweep) {
      for (int c = 0; c < 4; ++c) {
        constexpr double inv_phi = 0.6180339887498949;
        double lo = ang[c] - bracket, hi = ang[c] + bracket;
        double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
        auto f = [&](double x) {
          std::array<double, 4> probe = ang;
          probe[c] = x;
          return eval_angles(probe);
        };
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
        if (f(xm) > value) {
          value = f(xm);
          ang[c] = xm;
        }
      }
      bracket *= 0.35;
    }
    if (value > best_value) {
      best_value = value;
      best_angles = ang;
    }
  }
  if (!std::isfinite(best_value)) {
    throw NumericalError("chsh_optimize objective is not finite");
  }

  ChshResult out;
  out.a = from_spherical(best_angles[0], best_angles[1]);
  out.a_prime = from_spherical(best_angles[2], best_angles[3]);
  const Vec3 ta = transpose_apply(t, out.a);
  const Vec3 tap = transpose_apply(t, out.a_prime);
  const Vec3 u{ta[0] + tap[0], ta[1] + tap[1], ta[2] + tap[2]};
  const Vec3 v{ta[0] - tap[0], ta[1] - tap[1], ta[2] - tap[2]};
  out.b = norm(u) > 1e-14 ? normalized(u) : Vec3{0.0, 0.0, 1.0};
  out.b_prime = norm(v) > 1e-14 ? normalized(v) : Vec3{0.0, 0.0, 1.0};
  out.s = best_value;
  return out;
}

}  // namespace qss3
