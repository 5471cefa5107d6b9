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

#include "qss3/correlations.hpp"
#include "qss3/qmath.hpp"
#include "qss3/states.hpp"

namespace qss3 {

/// Horodecki M: sum of the two largest eigenvalues of T^T T; in [0, 2].
/// M > 1 signals a CHSH violation.
double m_value(const ComplexMatrix& rho2);
double m_value(const RealMatrix3& t);

/// Bell-CHSH value 2 sqrt(M); bounded by 2 sqrt(2).
double s_value(const ComplexMatrix& rho2);

struct BellSummary {
  double m_ab = 0.0;
  double m_ac = 0.0;
  double s_ab = 0.0;
  double s_ac = 0.0;
  double s_max = 0.0;
};

BellSummary bell_summary(const PureState3& psi);
BellSummary bell_summary(const BlochDecomp3& d);
double s_max(const PureState3& psi);

/// Closed M for the real GHZ-class family:
/// 1 - 4 (l1 l4 + l2 l3)^2 + 4 l0^2 |l2^2 - l3^2|. Transcribed verbatim; see
/// the tests for its agreement domain.
double closed_m_ghzr(const AcinParams& p);

/// Closed eigenvalue lists for R^T R and Q^T Q (appendix forms), in the
/// published order.
std::array<double, 3> closed_rtr_eigenvalues(const AcinParams& p);
std::array<double, 3> closed_qtq_eigenvalues(const AcinParams& p);

/// CHSH optimum found by direct search over measurement settings. For fixed
/// a, a' the inner settings are optimal in closed form (b along T^T(a + a'),
/// b' along T^T(a - a')), so only a, a' are scanned and refined.
struct ChshResult {
  double s = 0.0;
  Vec3 a{}, a_prime{}, b{}, b_prime{};
};
ChshResult chsh_optimize(const ComplexMatrix& rho2);

}  // namespace qss3
