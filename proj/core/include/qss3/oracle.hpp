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

#include <cstdint>

#include "qss3/correlations.hpp"
#include "qss3/qmath.hpp"
#include "qss3/states.hpp"

namespace qss3 {

struct McConfig {
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Monte Carlo estimate of the average fidelity of the standard
/// Bell-measurement/Pauli-correction teleportation protocol over the given
/// resource, after pre-rotations of both halves found by a direct Euler-angle
/// search. Input states are drawn uniformly on the Bloch sphere and the
/// measurement outcome is sampled, not branch-averaged. Deterministic for a
/// fixed (rho2, cfg).
McEstimate mc_teleport_fidelity(const ComplexMatrix& rho2, const McConfig& cfg);

/// Exact Bloch-average fidelity of the same rotated protocol (the quantity the
/// rotation search maximizes); the Monte Carlo mean converges to this value.
double optimized_protocol_fidelity(const ComplexMatrix& rho2);

/// Exact two-stage reconstruction fidelity at one assistant axis:
/// sum over outcomes of p * tele_fidelity(conditioned AC state). Outcomes with
/// probability below 1e-12 are skipped.
double csr_conditioned_fidelity(const PureState3& psi, const Vec3& axis);

struct AxisOptimum {
  double value = 0.0;
  Vec3 axis{0.0, 0.0, 1.0};
};

/// csr_conditioned_fidelity maximized over assistant axes by an independent
/// sphere scan plus refinement (no use of the correlation-tensor path).
AxisOptimum max_conditioned_fidelity(const PureState3& psi);

}  // namespace qss3
