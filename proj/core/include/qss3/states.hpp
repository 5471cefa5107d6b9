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
#include <iosfwd>
#include <optional>
#include <string>

#include "qss3/qmath.hpp"

namespace qss3 {

/// Pure three-qubit ket. Basis order is |q_A q_B q_C> with A the dealer,
/// B the assistant and C the reconstructor; amplitude index = 4*q_A + 2*q_B + q_C.
struct PureState3 {
  std::array<Complex, 8> amp{};

  double norm_sq() const;
  bool is_normalized(double tol = kNormTol) const;
};

/// Renormalizes a state; throws on (near-)zero vectors.
PureState3 normalized(const PureState3& psi);

/// Five-coefficient-plus-phase parametrization of a GHZ-class state:
/// lambda0|000> + lambda1 e^{i phi}|100> + lambda2|101> + lambda3|110> + lambda4|111>.
/// phi = 0 is the real (GHZ^R) slice.
struct AcinParams {
  std::array<double, 5> lambda{};
  double phi = 0.0;

  double sum_sq() const;
};

/// Single-angle family lambda = (cos(theta)/sqrt2, sin(theta)/sqrt2, 0, 0, 1/sqrt2),
/// theta in [0, pi/2]. theta = 0 is the GHZ state.
struct MsrParams {
  double theta = 0.0;
};

/// Bipartite channel carved out of the three parties.
enum class ChannelRole {
  DealerAssistant,      // AB
  DealerReconstructor,  // AC
  AssistantReconstructor  // BC
};

PureState3 from_acin(const AcinParams& p);
PureState3 from_msr(const MsrParams& p);

/// |psi><psi| as an 8x8 density matrix.
ComplexMatrix density(const PureState3& psi);

/// Two-qubit reduced density matrix of the given channel.
ComplexMatrix reduced_pair(const PureState3& psi, ChannelRole channel);

/// Tiny deterministic PRNG (splitmix64). Used everywhere a seeded stream is
/// needed so outputs are identical across platforms and worker counts.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double next_double();

 private:
  std::uint64_t state_;
};

/// Independent per-record seed for stream `index` of a base seed.
std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t index);

/// One draw from the flat measure on squared amplitudes: (lambda_i^2) uniform
/// on the 4-simplex via sorted-uniform spacings, phi uniform on [0, 2pi) when
/// include_phase is set, else 0. Deterministic for a fixed seed.
AcinParams sample_acin(std::uint64_t seed, bool include_phase);

/// A state read from a state file; params is present only for `acin` files.
struct LoadedState {
  PureState3 psi;
  std::optional<AcinParams> params;
};

/// Parses the state file format: first non-comment line is a tag. Tag `acin`
/// is followed by one line `lambda0 lambda1 lambda2 lambda3 lambda4 phi`;
/// tag `amplitudes` by eight `re im` lines in basis index order. Lines whose
/// first non-blank character is '#' are comments.
LoadedState parse_state(std::istream& in);
LoadedState load_state_file(const std::string& path);

}  // namespace qss3
