// Copyright 2026 The qfi-conveyor Authors
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

#include "qfic/calibration.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qfic/statevec.hpp"
#include "test_helpers.hpp"

using namespace qfic;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kOneDegree = kPi / 180.0;
}

TEST_SUITE_BEGIN("calibration");

TEST_CASE("single-qubit ratio") {
  CHECK(cfi_single_miscal(0.0) == doctest::Approx(1.0));
  CHECK(cfi_single_miscal(kOneDegree) ==
        doctest::Approx(0.999695).epsilon(5e-7));
  CHECK(cfi_single_miscal(kPi / 4) == doctest::Approx(0.5));
  CHECK_THROWS_AS(cfi_single_miscal(kPi / 2), ValidationError);
}

TEST_CASE("single-qubit ratio against the probability route") {
  for (double eps : {0.0, 0.05, 0.3, kPi / 4}) {
    const double ratio = cfi_single_miscal(eps);
    const double from_probs = cfi_single_from_probabilities(eps, 5e-4);
    CHECK(std::abs(from_probs - ratio) < 1e-6);
  }
}

TEST_CASE("ghz ratio and its exponential envelope") {
  SUBCASE("no slip, no loss") {
    const GhzMiscalRatio r = cfi_ghz_miscal(17, 0.0);
    CHECK(r.exact == doctest::Approx(1.0));
    CHECK(r.gauss == doctest::Approx(1.0));
  }
  SUBCASE("one-degree slip on one hundred qubits") {
    const GhzMiscalRatio r = cfi_ghz_miscal(100, kOneDegree);
    CHECK(r.exact == doctest::Approx(0.9700).epsilon(1e-4));
    CHECK(r.gauss == doctest::Approx(0.9700).epsilon(1e-4));
  }
  SUBCASE("one-degree slip on one thousand qubits") {
    const GhzMiscalRatio r = cfi_ghz_miscal(1000, kOneDegree);
    CHECK(r.gauss == doctest::Approx(std::exp(-0.304617)).epsilon(1e-4));
    CHECK(std::abs(r.exact / r.gauss - 1.0) < 0.01);
  }
  SUBCASE("envelope accuracy in the m eps^2 <= 0.5 window") {
    for (int m : {10, 100, 1000}) {
      const double eps = std::sqrt(0.5 / m);
      const GhzMiscalRatio r = cfi_ghz_miscal(m, eps);
      CHECK(std::abs(r.exact / r.gauss - 1.0) < 0.01);
    }
  }
  SUBCASE("ghz readout is never more robust than the single qubit") {
    for (int m : {1, 2, 5, 10, 100}) {
      for (double eps : {0.01, 0.1, 0.5, 1.2}) {
        const GhzMiscalRatio r = cfi_ghz_miscal(m, eps);
        CHECK(r.exact <= cfi_single_miscal(eps) + 1e-15);
        CHECK(r.exact <= 1.0);
        CHECK(r.gauss <= 1.0);
        if (eps > 0.0 && m >= 1) CHECK(r.exact < 1.0);
      }
    }
  }
  SUBCASE("log-ratio slope is exactly 2 log cos eps") {
    const double eps = 0.02;
    const double slope_ref = 2.0 * std::log(std::cos(eps));
    for (int m : {10, 100, 1000}) {
      const GhzMiscalRatio r = cfi_ghz_miscal(m, eps);
      CHECK(std::log(r.exact) / m ==
            doctest::Approx(slope_ref).epsilon(1e-6));
    }
  }
}

namespace {

// Fringe-centered z-basis GHZ: the relative phase i^(m+3) puts the
// y-parity fringe through zero with maximal slope at theta = 0.
SymmetricState centered_ghz(int m, double theta) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(m + 1);
  c[m] = 1 / std::sqrt(2.0);
  cdouble chi(1, 0);
  for (int k = 0; k < (m + 3) % 4; ++k) chi *= cdouble(0, 1);
  c[0] = chi * std::polar(1 / std::sqrt(2.0), m * theta);
  return SymmetricState::from_coeffs(m, std::move(c));
}

}  // namespace

TEST_CASE("parity expectation") {
  SUBCASE("odd in theta") {
    for (double eps : {0.0, 0.2}) {
      CHECK(parity_expectation(4, 0.0, eps) == doctest::Approx(0.0));
    }
  }
  SUBCASE("small-theta linearization at zero slip") {
    for (double th : {0.001, 0.002, 0.005}) {
      const double exact = parity_expectation(3, th, 0.0);
      const double linear = 3.0 * th;
      // the residual is cubic: sin(3 th) - 3 th
      CHECK(std::abs(exact - linear) < 5.0 * th * th * th);
    }
  }
  SUBCASE("zero slip matches the coherent centered fringe exactly") {
    for (int m : {1, 2, 3, 5}) {
      for (double th : {0.002, 0.3, 1.1}) {
        const double coherent =
            symmetric_tensor_expectation(centered_ghz(m, th), pauli_y());
        CHECK(parity_expectation(m, th, 0.0) ==
              doctest::Approx(coherent).epsilon(1e-12));
      }
    }
  }
  SUBCASE("slip-sign average oracle at m = 3") {
    // enumerate the 2^3 slip-sign patterns explicitly with full tensors
    const int m = 3;
    const double th = 0.4, eps = 0.3;
    const Eigen::VectorXcd c = centered_ghz(m, th).coeffs();
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
    psi[0] = c[m];   // all bits 0 <-> all +z
    psi[7] = c[0];
    double avg = 0.0;
    for (int signs = 0; signs < 8; ++signs) {
      Eigen::MatrixXcd big = Eigen::MatrixXcd::Identity(1, 1);
      for (int q = 0; q < m; ++q) {
        const double e = ((signs >> q) & 1) ? -eps : eps;
        const Eigen::Matrix2cd axis =
            std::cos(e) * pauli_y() + std::sin(e) * pauli_x();
        big = qfic::test::kron(big, axis);
      }
      avg += std::real(psi.dot(big * psi)) / 8.0;
    }
    CHECK(parity_expectation(m, th, eps) ==
          doctest::Approx(avg).epsilon(1e-10));
  }
  SUBCASE("slope carries the per-qubit contrast") {
    const int m = 5;
    const double eps = 0.3, h = 1e-5;
    const double slope =
        (parity_expectation(m, h, eps) - parity_expectation(m, -h, eps)) /
        (2 * h);
    CHECK(slope ==
          doctest::Approx(m * std::pow(std::cos(eps), m)).epsilon(1e-6));
  }
  SUBCASE("quarter-turn slip flattens the working point") {
    // reported behavior: the signal derivative vanishes at theta = 0
    for (int m : {2, 3}) {
      const double h = 1e-5;
      const double slope = (parity_expectation(m, h, kPi / 2) -
                            parity_expectation(m, -h, kPi / 2)) /
                           (2 * h);
      CHECK(std::abs(slope) < 1e-6);
    }
  }
  SUBCASE("collective tensor evaluation matches the full tensor at m = 3") {
    const int m = 3;
    for (double th : {0.002, 0.4}) {
      for (double eps : {0.0, 0.3, kPi / 4}) {
        const Eigen::Matrix2cd axis =
            std::cos(eps) * pauli_y() + std::sin(eps) * pauli_x();
        const double sector =
            symmetric_tensor_expectation(ghz_z_state(m, th), axis);
        const Eigen::MatrixXcd big = qfic::test::kron_power(axis, m);
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
        psi[0] = 1 / std::sqrt(2.0);
        psi[7] = std::polar(1 / std::sqrt(2.0), m * th);
        const double tensor = std::real(psi.dot(big * psi));
        CHECK(sector == doctest::Approx(tensor).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("symmetric tensor expectation rejects non-equatorial operators") {
  const SymmetricState s = ghz_z_state(2, 0.0);
  CHECK_THROWS_AS(symmetric_tensor_expectation(s, pauli_z()),
                  ValidationError);
}

TEST_SUITE_END();
