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

#ifndef QFIC_CALIBRATION_HPP_
#define QFIC_CALIBRATION_HPP_

#include "qfic/common.hpp"
#include "qfic/sources.hpp"

namespace qfic {

// A phase slip epsilon tilts every readout axis from sigma_y to
// sigma_y cos(eps) + sigma_x sin(eps).
struct Miscalibration {
  double epsilon = 0.0;

  void validate() const;
};

// Single-qubit robustness: the classical-to-quantum information ratio
// cos^2(eps) of the slipped readout (linearized working-point model).
double cfi_single_miscal(double epsilon);

// The same slip on an M-qubit GHZ parity readout: exact ratio cos^{2M}(eps)
// and its exponential envelope exp(-M eps^2).
struct GhzMiscalRatio {
  double exact;
  double gauss;
};
GhzMiscalRatio cfi_ghz_miscal(int m, double epsilon);

// Classical Fisher information of the linearized +-1 readout with
// probabilities (1 +- cos(eps) theta)/2; approaches cos^2(eps) at the
// working point.
double cfi_single_from_probabilities(double epsilon, double theta);

// GHZ parity fringe sin(M theta) cos^M(eps): the y-parity readout of the
// fringe-centered z-basis GHZ with sign-uncertain per-qubit slips averaged
// out. The small-theta linearization is M theta cos^M(eps); an identical
// known-sign slip would shift the fringe instead of shrinking it.
double parity_expectation(int m, double theta, double epsilon);

// Generic collective-sector expectation of a tensor power u^{x M} of one
// equatorial single-qubit operator (zero diagonal); the backbone behind
// parity_expectation, exported for cross-checks.
double symmetric_tensor_expectation(const SymmetricState& s,
                                    const Eigen::Matrix2cd& u);

}  // namespace qfic

#endif  // QFIC_CALIBRATION_HPP_
