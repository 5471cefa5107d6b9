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

inline constexpr double kTieTol = 1e-9;  // |theta2_ab - theta2_ac| tie window

/// Sum of singular values of the channel correlation matrix; in [0, 3].
double theta2(const ComplexMatrix& rho2);
double theta2(const RealMatrix3& t);

/// Maximum teleportation fidelity of a two-qubit channel: (1 + theta2/3)/2.
double tele_fidelity(const ComplexMatrix& rho2);

struct Theta3Result {
  double value = 0.0;
  Vec3 axis{0.0, 0.0, 1.0};  // assistant measurement axis attaining the value
};

/// Reconstruction figure of merit: maximum over unit axes n of
/// (||R + T(n)||_1 + ||R - T(n)||_1)/2, where R is the dealer-reconstructor
/// correlation matrix and T(n) the tensor contracted along the assistant.
/// Accepts any valid three-qubit density matrix.
Theta3Result theta3(const ComplexMatrix& rho3);
Theta3Result theta3(const PureState3& psi);

/// The theta3 objective at one fixed axis.
double theta3_at_axis(const RealMatrix3& r_ac, const Tensor3& tau,
                      const Vec3& axis);

/// Controlled-state-reconstruction fidelity: 1/2 + theta3/6.
double csr_fidelity(const ComplexMatrix& rho3);
double csr_fidelity(const PureState3& psi);

// Closed forms for the real (phi = 0) GHZ-class family. These transcribe the
// published expressions verbatim; see the tests for the coefficient patterns
// on which they agree with the numeric path.
double closed_theta3_ghzr(const AcinParams& p);   // 4 l0 max(l2, l4) + 1
double closed_norm_r(const AcinParams& p);        // ||R|| of the AC channel
double closed_norm_q(const AcinParams& p);        // ||Q|| of the AB channel
double closed_theta2_ghzr(const AcinParams& p);   // max of the two norms

// Case-rewritten forms of the same norms (appendix variants); algebraically
// identical to closed_norm_r/q for normalized coefficients.
double closed_norm_r_alt(const AcinParams& p);
double closed_norm_q_alt(const AcinParams& p);

struct MsrClosedForms {
  double theta2 = 0.0;  // cos(theta)
  double theta3 = 0.0;  // 2 cos(theta) + 1
};
MsrClosedForms msr_closed_forms(double theta);

/// Per-state fidelity bundle.
struct FidelitySummary {
  double theta2_ab = 0.0;
  double theta2_ac = 0.0;
  double f_ab = 0.0;
  double f_ac = 0.0;
  double f_max = 0.0;
  double theta3 = 0.0;
  double f_csr = 0.0;
  Vec3 best_axis{0.0, 0.0, 1.0};
  bool tie_ab_ac = false;
};

FidelitySummary fidelity_summary(const PureState3& psi);
/// Variant reusing an existing decomposition (one pass per state in sweeps).
FidelitySummary fidelity_summary(const BlochDecomp3& d);

}  // namespace qss3
