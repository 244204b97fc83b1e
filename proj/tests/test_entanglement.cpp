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

#include "qfic/entanglement.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qfic/bruteforce.hpp"
#include "test_helpers.hpp"

using namespace qfic;

namespace {

constexpr double kPi = std::numbers::pi;

SourceSpec single_source() {
  SourceSpec spec;
  spec.kind = SourceKind::Separable;
  spec.m = 1;
  return spec;
}

BipartiteState pinned_pair(int n, double t) {
  const ChainLayout layout = pinned_protocol_layout(n);
  const PureState state = transfer_state(
      single_source(), layout, pinned_protocol_couplings(n), t, 0.0);
  return reduce_pair(state, layout);
}

}  // namespace

TEST_SUITE_BEGIN("entanglement");

TEST_CASE("reduce_pair at t = 0 is the product projector") {
  const BipartiteState pair = pinned_pair(4, 0.0);
  // |+x> x |+x| in the -1-first ordering: all entries 1/4
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Constant(0.25);
  CHECK((pair.rho().elements() - expected).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(negativity(pair) == doctest::Approx(0.0));
}

TEST_CASE("reduce_pair matches the bipartite closed-form elements") {
  // alpha = (1/4) cos^(n-2)(2t) e^{-it} on the single-flip entries,
  // beta = (1/4) cos^(n-2)(4t) on the double-flip corner, 1/4 on the
  // antidiagonal middle.
  const int n = 5;
  const double t = 0.613;
  const BipartiteState pair = pinned_pair(n, t);
  const Eigen::MatrixXcd& rho = pair.rho().elements();

  const double c2 = std::pow(std::cos(2 * t), n - 2);
  const cdouble alpha = 0.25 * c2 * std::polar(1.0, -t);
  const double beta = 0.25 * std::pow(std::cos(4 * t), n - 2);

  CHECK(std::abs(rho(0, 1) - alpha) < 1e-9);
  CHECK(std::abs(rho(0, 2) - alpha) < 1e-9);
  CHECK(std::abs(rho(1, 3) - std::conj(alpha)) < 1e-9);
  CHECK(std::abs(rho(2, 3) - std::conj(alpha)) < 1e-9);
  CHECK(std::abs(rho(0, 3) - cdouble(beta, 0)) < 1e-9);
  CHECK(std::abs(rho(1, 2) - cdouble(0.25, 0)) < 1e-9);
  for (int d = 0; d < 4; ++d) {
    CHECK(std::abs(rho(d, d) - cdouble(0.25, 0)) < 1e-9);
  }
}

TEST_CASE("reduce_pair rejects larger sources") {
  const ChainLayout layout = ChainLayout::make(4, {0, 1}, 3);
  const PureState psi = product_state(4, {Axis::X, +1});
  CHECK_THROWS_AS(reduce_pair(psi, layout), ValidationError);
}

TEST_CASE("partial transpose basics") {
  SUBCASE("product states stay PSD with the same spectrum") {
    const Eigen::Vector2cd a = axis_eigenstate({Axis::Y, +1});
    const Eigen::Vector2cd b = axis_eigenstate({Axis::X, -1});
    const Eigen::Matrix4cd rho =
        qfic::test::kron(a * a.adjoint(), b * b.adjoint());
    const BipartiteState pair =
        BipartiteState::from_density(DensityMatrix::from_matrix(rho));
    for (PairSubsystem sub : {PairSubsystem::First, PairSubsystem::Second}) {
      const Eigen::Matrix4cd pt = partial_transpose(pair, sub);
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(
          pt, Eigen::EigenvaluesOnly);
      CHECK(es.eigenvalues().minCoeff() > -1e-12);
      CHECK(std::abs(pt.trace() - cdouble(1, 0)) < 1e-12);
    }
    CHECK(negativity(pair) == doctest::Approx(0.0));
  }
  SUBCASE("Bell state spectrum and maximal negativity") {
    Eigen::Vector4cd bell = Eigen::Vector4cd::Zero();
    bell[0] = bell[3] = 1 / std::sqrt(2.0);
    const BipartiteState pair = BipartiteState::from_density(
        DensityMatrix::from_matrix(bell * bell.adjoint()));
    const Eigen::Matrix4cd pt =
        partial_transpose(pair, PairSubsystem::Second);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(pt,
                                                       Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues()[0] == doctest::Approx(-0.5));
    for (int i = 1; i < 4; ++i) {
      CHECK(es.eigenvalues()[i] == doctest::Approx(0.5));
    }
    CHECK(negativity(pair) == doctest::Approx(0.5));
  }
}

TEST_CASE("partial transpose spectrum matches the four closed forms") {
  // lambda_{1,2} = (3 + 4b -+ sqrt((1-4b)^2 + (16 Re alpha)^2))/8
  // lambda_{3,4} = (1 - 4b -+ sqrt((1-4b)^2 + (16 Im alpha)^2))/8
  // with alpha = cos^(n-2)(2t) e^{-it}/4 and b = cos^(n-2)(4t)/4.
  for (int n : {3, 5, 7}) {
    for (double t : {0.17, 0.6, 1.3, 2.4}) {
      const double c2 = std::pow(std::cos(2 * t), n - 2);
      const cdouble alpha = 0.25 * c2 * std::polar(1.0, -t);
      const double b = 0.25 * std::pow(std::cos(4 * t), n - 2);
      const double re16 = 16.0 * alpha.real();
      const double im16 = 16.0 * alpha.imag();
      const double root_re =
          std::sqrt((1 - 4 * b) * (1 - 4 * b) + re16 * re16);
      const double root_im =
          std::sqrt((1 - 4 * b) * (1 - 4 * b) + im16 * im16);
      std::array<double, 4> expected = {
          (3 + 4 * b - root_re) / 8.0, (3 + 4 * b + root_re) / 8.0,
          (1 - 4 * b - root_im) / 8.0, (1 - 4 * b + root_im) / 8.0};
      std::sort(expected.begin(), expected.end());

      const Eigen::Matrix4cd pt =
          partial_transpose(pinned_pair(n, t), PairSubsystem::Second);
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(
          pt, Eigen::EigenvaluesOnly);
      for (int i = 0; i < 4; ++i) {
        CHECK(es.eigenvalues()[i] ==
              doctest::Approx(expected[i]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("partial transpose eigenvalues sum to one on the grid") {
  for (int i = 0; i < 40; ++i) {
    const double t = kPi * i / 39.0;
    const Eigen::Matrix4cd pt =
        partial_transpose(pinned_pair(4, t), PairSubsystem::Second);
    CHECK(std::abs(pt.trace() - cdouble(1, 0)) < 1e-12);
  }
}

TEST_CASE("closed-form negativity against the eigensolver") {
  for (int n : {3, 4, 5, 6, 7, 8}) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double t = kPi * i / 199.0;
      const double eig = negativity(pinned_pair(n, t));
      const double closed =
          negativity_closed_form(t, n, pinned_protocol_qfi(t, n));
      worst = std::max(worst, std::abs(eig - closed));
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("closed-form preconditions") {
  CHECK_THROWS_AS(negativity_closed_form(0.5, 2, 0.1), ValidationError);
  CHECK_THROWS_AS(negativity_closed_form(0.5, 4, -0.1), ValidationError);
}

TEST_CASE("closed-form values") {
  // alpha = 0 with full transfer: the Bell ceiling
  CHECK(negativity_closed_form(kPi / 2, 4, 1.0) == doctest::Approx(0.5));
  // no signal, no entanglement
  CHECK(negativity_closed_form(kPi / 2, 4, 0.0) == doctest::Approx(0.0));
  // generic point pinned by the eigensolver
  const double t = 0.3;
  const int n = 5;
  CHECK(negativity_closed_form(t, n, pinned_protocol_qfi(t, n)) ==
        doctest::Approx(negativity(pinned_pair(n, t))).epsilon(1e-9));
}

TEST_CASE("full transfer forms a Bell pair") {
  for (int n : {3, 5, 8}) {
    const BipartiteState pair = pinned_pair(n, kPi / 2);
    CHECK(negativity(pair) == doctest::Approx(0.5).epsilon(1e-9));
    const Eigen::MatrixXcd& rho = pair.rho().elements();
    CHECK(std::abs((rho * rho).trace().real() - 1.0) < 1e-9);
  }
}

TEST_CASE("imaginary part of the coherence carries the transferred qfi") {
  // (16 Im alpha)^2 = 16 qfi on the pinned protocol
  for (int n : {3, 5, 8}) {
    for (double t : {0.2, 0.7, 1.9}) {
      const BipartiteState pair = pinned_pair(n, t);
      const double im_alpha = pair.rho().elements()(0, 1).imag();
      CHECK(256.0 * im_alpha * im_alpha ==
            doctest::Approx(16.0 * pinned_protocol_qfi(t, n)).epsilon(1e-9));
    }
  }
}

TEST_CASE("negativity and transferred qfi peak together") {
  for (int n : {3, 5, 8}) {
    int arg_neg = 0, arg_qfi = 0;
    double best_neg = -1.0, best_qfi = -1.0;
    for (int i = 0; i < 200; ++i) {
      const double t = kPi * i / 199.0;
      const double neg = negativity(pinned_pair(n, t));
      const double qfi = pinned_protocol_qfi(t, n);
      if (neg > best_neg) {
        best_neg = neg;
        arg_neg = i;
      }
      if (qfi > best_qfi) {
        best_qfi = qfi;
        arg_qfi = i;
      }
    }
    CHECK(std::abs(arg_neg - arg_qfi) <= 1);
  }
}

TEST_SUITE_END();
