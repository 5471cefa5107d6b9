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

namespace {

void check_matrix_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                        double tol = 1e-12) {
  REQUIRE(a.dim() == b.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) {
      CAPTURE(r);
      CAPTURE(c);
      CHECK(std::abs(a(r, c) - b(r, c)) <= tol);
    }
}

}  // namespace

TEST_CASE("kron identity and Pauli cases") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  check_matrix_equal(kron(i2, i2), ComplexMatrix::identity(4));

  const ComplexMatrix zz = kron(pauli_matrix(3), pauli_matrix(3));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double want = i == j ? (i == 0 || i == 3 ? 1.0 : -1.0) : 0.0;
      CHECK(std::abs(zz(i, j) - want) <= 1e-15);
    }

  // sigma_x (x) I has identity blocks off the diagonal.
  const ComplexMatrix xi = kron(pauli_matrix(1), i2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double want = (j == (i + 2) % 4 && (i / 2 != j / 2)) ? 1.0 : 0.0;
      CHECK(std::abs(xi(i, j) - want) <= 1e-15);
    }

  check_matrix_equal(kron(pauli_matrix(2), pauli_matrix(0)),
                     ref_kron(pauli_matrix(2), pauli_matrix(0)));
}

TEST_CASE("kron rejects oversized products") {
  const ComplexMatrix i4 = ComplexMatrix::identity(4);
  CHECK_THROWS_AS((void)kron(i4, i4), std::invalid_argument);
  CHECK_THROWS_AS((void)kron(ComplexMatrix::identity(8), i4),
                  std::invalid_argument);
}

TEST_CASE("partial trace of Bell state marginal") {
  const ComplexMatrix rho = bell_phi_plus();
  const ComplexMatrix a = partial_trace(rho, {0}, {2, 2});
  check_matrix_equal(a, Complex(0.5) * ComplexMatrix::identity(2));
}

TEST_CASE("partial trace of product state") {
  ComplexMatrix rho(8);
  rho(0, 0) = 1.0;  // |000><000|
  const ComplexMatrix ac = partial_trace(rho, {0, 2}, {2, 2, 2});
  ComplexMatrix want(4);
  want(0, 0) = 1.0;
  check_matrix_equal(ac, want);
}

TEST_CASE("partial trace of GHZ dealer-reconstructor pair") {
  const ComplexMatrix rho = density(ghz_state());
  const ComplexMatrix got = partial_trace(rho, {0, 2}, {2, 2, 2});
  // Frozen from the brute-force trace loop below.
  ComplexMatrix want(4);
  want(0, 0) = want(3, 3) = 0.5;
  check_matrix_equal(got, want, 1e-12);
  check_matrix_equal(got, ref_partial_trace3(rho, {0, 2}), 1e-13);
}

TEST_CASE("partial trace agrees with the reference loop on random states") {
  SplitMix64 rng(41);
  const std::vector<std::vector<int>> keeps = {{0}, {1}, {2}, {0, 1}, {0, 2},
                                               {1, 2}};
  for (int t = 0; t < 25; ++t) {
    const ComplexMatrix rho = density(random_pure3(rng));
    for (const auto& keep : keeps) {
      check_matrix_equal(partial_trace(rho, keep, {2, 2, 2}),
                         ref_partial_trace3(rho, keep), 1e-13);
    }
  }
}

TEST_CASE("partial trace preserves trace and positivity") {
  SplitMix64 rng(42);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix rho = density(random_pure3(rng));
    for (const auto& keep :
         std::vector<std::vector<int>>{{0}, {0, 1}, {0, 2}, {1, 2}}) {
      const ComplexMatrix red = partial_trace(rho, keep, {2, 2, 2});
      CHECK(std::abs(red.trace() - 1.0) <= 1e-12);
      const auto eig = hermitian_eigenvalues(red);
      CHECK(eig.back() >= -kPosTol);
    }
  }
}

TEST_CASE("partial trace input validation") {
  ComplexMatrix bad(4);
  bad(0, 1) = 1.0;  // not Hermitian
  bad(0, 0) = 1.0;
  CHECK_THROWS_AS((void)partial_trace(bad, {0}, {2, 2}),
                  std::invalid_argument);

  const ComplexMatrix rho = bell_phi_plus();
  CHECK_THROWS_AS((void)partial_trace(rho, {}, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS((void)partial_trace(rho, {2}, {2, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)partial_trace(rho, {0, 0}, {2, 2}),
                  std::invalid_argument);

  ComplexMatrix off_trace = bell_phi_plus();
  off_trace(0, 0) = 0.75;  // trace 1.25
  CHECK_THROWS_AS((void)partial_trace(off_trace, {0}, {2, 2}),
                  std::invalid_argument);
}

TEST_CASE("hermitian eigenvalues on closed-form cases") {
  const auto ex = hermitian_eigenvalues(pauli_matrix(1));
  CHECK(ex[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ex[1] == doctest::Approx(-1.0).epsilon(1e-12));

  ComplexMatrix d(2);
  d(0, 0) = 0.3;
  d(1, 1) = 0.7;
  const auto ed = hermitian_eigenvalues(d);
  CHECK(ed[0] == doctest::Approx(0.7));
  CHECK(ed[1] == doctest::Approx(0.3));

  const auto eg =
      hermitian_eigenvalues(reduced_pair(ghz_state(), ChannelRole::DealerReconstructor));
  CHECK(eg[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eg[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(eg[2]) <= 1e-12);
  CHECK(std::abs(eg[3]) <= 1e-12);
}

TEST_CASE("hermitian eigenvalues: spectrum properties on random matrices") {
  SplitMix64 rng(7);
  for (int t = 0; t < 12; ++t) {
    const int dim = t % 2 == 0 ? 4 : 8;
    ComplexMatrix a(dim);
    for (int r = 0; r < dim; ++r) {
      a(r, r) = gauss(rng);
      for (int c = r + 1; c < dim; ++c) {
        a(r, c) = Complex(gauss(rng), gauss(rng));
        a(c, r) = std::conj(a(r, c));
      }
    }
    const auto eig = hermitian_eigenvalues(a);

    // Sum equals trace.
    double sum = 0.0;
    for (double e : eig) sum += e;
    CHECK(std::abs(sum - a.trace().real()) <= 1e-9);

    // Descending order.
    for (std::size_t i = 1; i < eig.size(); ++i) CHECK(eig[i - 1] >= eig[i]);

    // Each eigenvalue is a root of the characteristic polynomial.
    for (double e : eig) {
      ComplexMatrix shifted = a;
      for (int i = 0; i < dim; ++i) shifted(i, i) -= e;
      CHECK(std::abs(ref_det(shifted)) <= 1e-7);
    }

    // Invariance under a random unitary conjugation.
    const ComplexMatrix u = random_unitary(rng, dim);
    const auto eig2 = hermitian_eigenvalues(u * a * u.dagger());
    for (std::size_t i = 0; i < eig.size(); ++i) {
      CHECK(std::abs(eig[i] - eig2[i]) <= 1e-9);
    }

    // Uniform shift moves the spectrum exactly.
    ComplexMatrix shifted = a;
    for (int i = 0; i < dim; ++i) shifted(i, i) += 0.5;
    const auto eig3 = hermitian_eigenvalues(shifted);
    for (std::size_t i = 0; i < eig.size(); ++i) {
      CHECK(std::abs(eig3[i] - eig[i] - 0.5) <= 1e-10);
    }
  }
}

TEST_CASE("hermitian eigenvalues rejects non-Hermitian input") {
  ComplexMatrix a(2);
  a(0, 1) = 1.0;
  CHECK_THROWS_AS((void)hermitian_eigenvalues(a), std::invalid_argument);
}

TEST_CASE("singular values of diagonal and frozen cases") {
  auto sv = singular_values(RealMatrix3::diag(1.0, -1.0, 0.0));
  CHECK(sv[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sv[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(sv[2]) <= 1e-12);

  sv = singular_values(RealMatrix3{});
  CHECK(sv[0] == 0.0);
  CHECK(sv[2] == 0.0);

  // R of the GHZ dealer-reconstructor channel.
  const RealMatrix3 r = bloch3(density(ghz_state())).r;
  sv = singular_values(r);
  CHECK(sv[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(sv[1]) <= 1e-10);
  CHECK(std::abs(sv[2]) <= 1e-10);
}

TEST_CASE("singular values square to the M^T M spectrum") {
  SplitMix64 rng(11);
  for (int t = 0; t < 40; ++t) {
    RealMatrix3 m;
    for (double& v : m.e) v = 2.0 * rng.next_double() - 1.0;
    const auto sv = singular_values(m);
    RealMatrix3 mtm;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += m(k, i) * m(k, j);
        mtm(i, j) = s;
      }
    const auto ref = ref_sym3_eigenvalues(mtm);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(sv[i] * sv[i] - ref[i]) <= 1e-10);
    }
  }
}

TEST_CASE("trace norm frozen values and properties") {
  CHECK(trace_norm(RealMatrix3::diag(1.0, -1.0, 1.0)) ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK(trace_norm(RealMatrix3::diag(0.0, 0.0, 1.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trace_norm(RealMatrix3::diag(1.0, -1.0, 1.0) +
                   RealMatrix3::diag(0.0, 0.0, 1.0)) ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK(trace_norm(RealMatrix3{}) == 0.0);

  SplitMix64 rng(13);
  for (int t = 0; t < 30; ++t) {
    RealMatrix3 m;
    for (double& v : m.e) v = 2.0 * rng.next_double() - 1.0;
    const double tn = trace_norm(m);
    const auto sv = singular_values(m);
    CHECK(tn >= sv[0] - 1e-12);
    CHECK(tn == doctest::Approx(trace_norm(m.transposed())).epsilon(1e-11));

    // Invariance under an orthogonal rotation built from a random SU(2).
    const ComplexMatrix u = random_su2(rng);
    RealMatrix3 rot;  // adjoint action of u on the Pauli basis
    for (int i = 1; i <= 3; ++i) {
      const ComplexMatrix conj_p = u * pauli_matrix(i) * u.dagger();
      for (int j = 1; j <= 3; ++j) {
        Complex tr = 0.0;
        const ComplexMatrix pj = pauli_matrix(j);
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) tr += conj_p(r, c) * pj(c, r);
        rot(j - 1, i - 1) = 0.5 * tr.real();
      }
    }
    RealMatrix3 rm;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += rot(i, k) * m(k, j);
        rm(i, j) = s;
      }
    CHECK(trace_norm(rm) == doctest::Approx(tn).epsilon(1e-10));
  }
}

TEST_CASE("trace norm rejects non-finite input") {
  RealMatrix3 m;
  m(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS((void)trace_norm(m), std::invalid_argument);
}

TEST_CASE("physical correlation matrices satisfy the purity bound") {
  SplitMix64 rng(17);
  for (int t = 0; t < 25; ++t) {
    const ComplexMatrix rho = random_reduced2(rng);
    const RealMatrix3 tmat = bloch2(rho).t;
    RealMatrix3 mtm;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += tmat(k, i) * tmat(k, j);
        mtm(i, j) = s;
      }
    const auto eig = eigenvalues_sym3(mtm);
    CHECK(eig[0] + eig[1] + eig[2] <= 3.0 + 1e-9);
  }
}
