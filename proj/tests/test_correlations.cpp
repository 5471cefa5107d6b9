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

#include <doctest.h>

#include "test_support.hpp"

using namespace qss3;
using namespace qss3::testing;

TEST_CASE("bloch2 of the Bell state") {
  const BlochDecomp2 d = bloch2(bell_phi_plus());
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(d.r[i]) <= 1e-13);
    CHECK(std::abs(d.s[i]) <= 1e-13);
  }
  CHECK(d.t(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.t(1, 1) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(d.t(2, 2) == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(std::abs(d.t(i, j)) <= 1e-13);
}

TEST_CASE("bloch2 of the maximally mixed state and GHZ channel") {
  const BlochDecomp2 mixed =
      bloch2(Complex(0.25) * ComplexMatrix::identity(4));
  CHECK(mixed.t.max_abs() <= 1e-14);
  CHECK(std::abs(mixed.r[0]) + std::abs(mixed.r[1]) + std::abs(mixed.r[2]) <=
        1e-14);

  const BlochDecomp2 ghz_ac =
      bloch2(reduced_pair(ghz_state(), ChannelRole::DealerReconstructor));
  CHECK(std::abs(ghz_ac.t(2, 2) - 1.0) <= 1e-12);
  CHECK(ghz_ac.t.max_abs() == doctest::Approx(1.0));
  CHECK(std::abs(ghz_ac.t(0, 0)) <= 1e-13);
  CHECK(std::abs(ghz_ac.t(1, 1)) <= 1e-13);
}

TEST_CASE("bloch2 matches the dense expectation oracle") {
  SplitMix64 rng(31);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix rho = random_reduced2(rng);
    const BlochDecomp2 d = bloch2(rho);
    for (int i = 1; i <= 3; ++i) {
      CHECK(std::abs(d.r[i - 1] - ref_pauli_expectation2(rho, i, 0)) <= 1e-12);
      CHECK(std::abs(d.s[i - 1] - ref_pauli_expectation2(rho, 0, i)) <= 1e-12);
      for (int j = 1; j <= 3; ++j) {
        CHECK(std::abs(d.t(i - 1, j - 1) - ref_pauli_expectation2(rho, i, j)) <=
              1e-12);
      }
    }
  }
}

TEST_CASE("bloch2 round trip") {
  SplitMix64 rng(32);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix rho = random_reduced2(rng);
    const ComplexMatrix back = reconstruct2(bloch2(rho));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) CHECK(std::abs(back(r, c) - rho(r, c)) <= 1e-10);
  }
}

TEST_CASE("bloch2 rejects malformed input") {
  ComplexMatrix bad(4);
  bad(0, 0) = 1.0;
  bad(1, 2) = 0.5;  // breaks hermiticity
  CHECK_THROWS_AS((void)bloch2(bad), std::invalid_argument);
}

TEST_CASE("bloch3 of GHZ: frozen tensor pattern") {
  const BlochDecomp3 d = bloch3(density(ghz_state()));

  // Brute-force oracle over all 27 Pauli triples.
  const ComplexMatrix rho = density(ghz_state());
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        CHECK(std::abs(d.tau(i - 1, j - 1, k - 1) -
                       ref_pauli_expectation3(rho, i, j, k)) <= 1e-12);
      }

  // Frozen values: xxx = 1, xyy = yxy = yyx = -1, all else 0. In particular
  // zzz vanishes: the |000> and |111> branches contribute opposite signs.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double want = 0.0;
        if (i == 0 && j == 0 && k == 0) want = 1.0;
        if ((i == 0 && j == 1 && k == 1) || (i == 1 && j == 0 && k == 1) ||
            (i == 1 && j == 1 && k == 0)) {
          want = -1.0;
        }
        CHECK(std::abs(d.tau(i, j, k) - want) <= 1e-12);
      }

  // Pair correlation matrices.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double want = (i == 2 && j == 2) ? 1.0 : 0.0;
      CHECK(std::abs(d.q(i, j) - want) <= 1e-12);
      CHECK(std::abs(d.r(i, j) - want) <= 1e-12);
    }
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(d.a[i]) <= 1e-13);
    CHECK(std::abs(d.b[i]) <= 1e-13);
    CHECK(std::abs(d.c[i]) <= 1e-13);
  }
}

TEST_CASE("bloch3 of |000> and the maximally mixed state") {
  PureState3 z;
  z.amp[0] = 1.0;
  const BlochDecomp3 d = bloch3(density(z));
  for (int i = 0; i < 3; ++i) {
    const double want = i == 2 ? 1.0 : 0.0;
    CHECK(std::abs(d.a[i] - want) <= 1e-14);
    CHECK(std::abs(d.b[i] - want) <= 1e-14);
    CHECK(std::abs(d.c[i] - want) <= 1e-14);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double want = (i == 2 && j == 2) ? 1.0 : 0.0;
      CHECK(std::abs(d.q(i, j) - want) <= 1e-14);
      CHECK(std::abs(d.r(i, j) - want) <= 1e-14);
      CHECK(std::abs(d.s(i, j) - want) <= 1e-14);
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const double want = (i == 2 && j == 2 && k == 2) ? 1.0 : 0.0;
        CHECK(std::abs(d.tau(i, j, k) - want) <= 1e-14);
      }

  const BlochDecomp3 mixed =
      bloch3(Complex(0.125) * ComplexMatrix::identity(8));
  CHECK(mixed.tau.max_abs() <= 1e-14);
  CHECK(mixed.q.max_abs() <= 1e-14);
  CHECK(mixed.r.max_abs() <= 1e-14);
  CHECK(mixed.s.max_abs() <= 1e-14);
}

TEST_CASE("bloch3 marginals match bloch2 of the reduced pairs") {
  SplitMix64 rng(33);
  for (int t = 0; t < 12; ++t) {
    const PureState3 psi = random_pure3(rng);
    const BlochDecomp3 d = bloch3(density(psi));
    const RealMatrix3 q =
        bloch2(reduced_pair(psi, ChannelRole::DealerAssistant)).t;
    const RealMatrix3 r =
        bloch2(reduced_pair(psi, ChannelRole::DealerReconstructor)).t;
    const RealMatrix3 s =
        bloch2(reduced_pair(psi, ChannelRole::AssistantReconstructor)).t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(d.q(i, j) - q(i, j)) <= 1e-12);
        CHECK(std::abs(d.r(i, j) - r(i, j)) <= 1e-12);
        CHECK(std::abs(d.s(i, j) - s(i, j)) <= 1e-12);
      }
  }
}

TEST_CASE("bloch3 round trip and tensor bounds") {
  SplitMix64 rng(34);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix rho = density(random_pure3(rng));
    const BlochDecomp3 d = bloch3(rho);
    CHECK(d.tau.max_abs() <= 1.0 + 1e-9);
    const ComplexMatrix back = reconstruct3(d);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) {
        CHECK(std::abs(back(r, c) - rho(r, c)) <= 1e-10);
      }
  }
}

TEST_CASE("contract_assistant slices of the GHZ tensor") {
  const Tensor3 tau = bloch3(density(ghz_state())).tau;

  const RealMatrix3 x = contract_assistant(tau, {1.0, 0.0, 0.0});
  CHECK(x(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(x(1, 1) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(x(2, 2)) <= 1e-13);
  CHECK(std::abs(x(0, 1)) + std::abs(x(1, 0)) <= 1e-13);

  // Every j = z tensor entry of GHZ vanishes, so the z slice is zero and the
  // z-axis conditioned value reduces to ||R||.
  const RealMatrix3 z = contract_assistant(tau, {0.0, 0.0, 1.0});
  CHECK(z.max_abs() <= 1e-13);

  const RealMatrix3 none = contract_assistant(Tensor3{}, {0.0, 1.0, 0.0});
  CHECK(none.max_abs() == 0.0);

  CHECK_THROWS_AS((void)contract_assistant(tau, {0.5, 0.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("condition_on_assistant on named states") {
  const ComplexMatrix ghz = density(ghz_state());

  const ConditionedPair zp = condition_on_assistant(ghz, {0.0, 0.0, 1.0}, +1);
  CHECK(zp.probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(zp.rho_ac(0, 0) - 1.0) <= 1e-12);

  const ConditionedPair xp = condition_on_assistant(ghz, {1.0, 0.0, 0.0}, +1);
  CHECK(xp.probability == doctest::Approx(0.5).epsilon(1e-12));
  const ComplexMatrix bell = bell_phi_plus();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      CHECK(std::abs(xp.rho_ac(r, c) - bell(r, c)) <= 1e-12);
    }

  PureState3 zst;
  zst.amp[0] = 1.0;
  for (int outcome : {+1, -1}) {
    const ConditionedPair cp =
        condition_on_assistant(density(zst), {1.0, 0.0, 0.0}, outcome);
    CHECK(cp.probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(cp.rho_ac(0, 0) - 1.0) <= 1e-12);
  }

  // Degenerate branch: measuring z on |000> can never give -1 on B.
  CHECK_THROWS_AS(
      (void)condition_on_assistant(density(zst), {0.0, 0.0, 1.0}, -1),
      NumericalError);
}

TEST_CASE("conditioning identity: 2 p T(outcome) = R +/- T(axis)") {
  SplitMix64 rng(35);
  for (int t = 0; t < 12; ++t) {
    const PureState3 psi = random_pure3(rng);
    const ComplexMatrix rho = density(psi);
    const BlochDecomp3 d = bloch3(rho);

    // Random axis.
    Vec3 n{gauss(rng), gauss(rng), gauss(rng)};
    n = normalized(n);
    const RealMatrix3 slice = contract_assistant(d.tau, n);

    double p_total = 0.0;
    for (int outcome : {+1, -1}) {
      const ConditionedPair cp = condition_on_assistant(rho, n, outcome);
      p_total += cp.probability;
      const RealMatrix3 t_cond = bloch2(cp.rho_ac).t;
      const RealMatrix3 expected =
          outcome > 0 ? d.r + slice : d.r - slice;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          CHECK(std::abs(2.0 * cp.probability * t_cond(i, j) -
                         expected(i, j)) <= 1e-10);
        }
    }
    CHECK(std::abs(p_total - 1.0) <= 1e-10);
  }
}
