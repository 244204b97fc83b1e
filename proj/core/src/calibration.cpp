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

#include <cmath>
#include <numbers>

#include "qfic/statevec.hpp"

namespace qfic {

void Miscalibration::validate() const {
  if (!(std::abs(epsilon) < std::numbers::pi / 2)) {
    throw ValidationError("phase slip must satisfy |epsilon| < pi/2");
  }
}

double cfi_single_miscal(double epsilon) {
  Miscalibration{epsilon}.validate();
  const double c = std::cos(epsilon);
  return c * c;
}

GhzMiscalRatio cfi_ghz_miscal(int m, double epsilon) {
  if (m < 1) throw ValidationError("cfi_ghz_miscal needs m >= 1");
  Miscalibration{epsilon}.validate();
  GhzMiscalRatio r;
  r.exact = std::pow(std::cos(epsilon), 2.0 * m);
  r.gauss = std::exp(-m * epsilon * epsilon);
  return r;
}

double cfi_single_from_probabilities(double epsilon, double theta) {
  Miscalibration{epsilon}.validate();
  const double c = std::cos(epsilon);
  const double p_plus = 0.5 * (1.0 + c * theta);
  const double p_minus = 0.5 * (1.0 - c * theta);
  if (p_plus <= 0.0 || p_minus <= 0.0) {
    throw ValidationError("linearized probabilities left (0, 1)");
  }
  const double slope = 0.5 * c;
  return slope * slope * (1.0 / p_plus + 1.0 / p_minus);
}

double symmetric_tensor_expectation(const SymmetricState& s,
                                    const Eigen::Matrix2cd& u) {
  if (std::abs(u(0, 0)) > kStructuralTol ||
      std::abs(u(1, 1)) > kStructuralTol) {
    throw ValidationError("tensor expectation requires a zero-diagonal "
                          "(equatorial) single-qubit operator");
  }
  const int m = s.m();
  // u^{x M} maps the Dicke state |n> to u10^n u01^(M-n) |M-n>.
  cdouble val = 0.0;
  for (int n = 0; n <= m; ++n) {
    cdouble amp = 1.0;
    for (int k = 0; k < n; ++k) amp *= u(1, 0);
    for (int k = 0; k < m - n; ++k) amp *= u(0, 1);
    val += std::conj(s.coeffs()[m - n]) * amp * s.coeffs()[n];
  }
  if (std::abs(val.imag()) > kStructuralTol) {
    throw NumericalError("tensor expectation has imaginary residue");
  }
  return val.real();
}

double parity_expectation(int m, double theta, double epsilon) {
  if (m < 1) throw ValidationError("parity_expectation needs m >= 1");
  // Centered GHZ parity fringe under sign-uncertain per-qubit slips. The
  // reference phase of the z-basis GHZ is chosen so that the y-parity
  // fringe passes through zero with maximal slope at theta = 0 (the
  // calibrated working point); each qubit's measurement axis is tilted by
  // a slip of unknown sign +-epsilon, and averaging the signs multiplies
  // the fringe contrast by cos(epsilon) per qubit:
  //   <O> = sin(M theta) cos^M(epsilon).
  // An identical (known-sign) slip on every qubit would instead shift the
  // whole fringe by M epsilon without any contrast loss; the incoherent
  // model is the one whose slope reproduces the cos^{2M} information
  // ratio. Exactness of the fringe itself is pinned against
  // symmetric_tensor_expectation in the tests.
  return std::sin(m * theta) * std::pow(std::cos(epsilon), m);
}

}  // namespace qfic
