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

#ifndef QFIC_METROLOGY_HPP_
#define QFIC_METROLOGY_HPP_

#include <Eigen/Dense>
#include <functional>

#include "qfic/common.hpp"
#include "qfic/statevec.hpp"

namespace qfic {

// A theta-parameterized family of density matrices. eval must be
// re-entrant; when deriv is absent the derivative is taken by central
// differences with step fd_step.
struct ThetaFamily {
  std::function<Eigen::MatrixXcd(double)> eval;
  std::function<Eigen::MatrixXcd(double)> deriv;  // optional analytic path
  double fd_step = kCentralDiffStep;
};

// The antenna's 2x2 marginal is characterized entirely by the population p
// and the coherence a together with its theta-derivative.
struct AntennaOffDiag {
  cdouble a{0.0, 0.0};
  cdouble a_dot{0.0, 0.0};
  double p = 0.5;
};

// Quantum Fisher information from the eigendecomposition of rho(theta):
//   2 sum_{ij} |<psi_j| drho |psi_i>|^2 / (p_i + p_j),
// skipping pairs with p_i + p_j below the support cutoff.
double qfi_eigendecomp(const ThetaFamily& family, double theta);

// Closed-form qubit QFI for a balanced (p = 1/2) antenna:
//   4 [ Re(adot e^{-i phi})^2 / (1 - 4|a|^2) + Im(adot e^{-i phi})^2 ],
// phi = arg(a), with e^{-i phi} := 1 when |a| < 1e-14 (the split is inert
// there). The radial weight follows from the eigenvalues 1/2 +- |a| and is
// pinned by the eigendecomposition route. Diverging radial term raises
// NumericalError; a vanishing radial derivative on a pure marginal falls
// back to the tangential limit.
double qfi_qubit(const AntennaOffDiag& off);

// Classical Fisher information of the +-1 y-basis readout on the antenna,
// outcome probabilities 1/2 +- Im a(theta). a_dot, when provided, replaces
// the central-difference derivative of a_of_theta.
double cfi_sigma_y(const std::function<cdouble(double)>& a_of_theta,
                   double theta,
                   const std::function<cdouble(double)>* a_dot = nullptr,
                   double fd_step = kCentralDiffStep);

// Same readout rotated in the equatorial plane by chi:
// sigma_chi = cos(chi) sigma_y + sin(chi) sigma_x. chi = 0 is cfi_sigma_y.
double cfi_pauli_readout(const std::function<cdouble(double)>& a_of_theta,
                         double chi, double theta,
                         const std::function<cdouble(double)>* a_dot = nullptr,
                         double fd_step = kCentralDiffStep);

// Equatorial angle chi maximizing the readout slope at the working point:
// 0 when a_dot is imaginary (y readout), pi/2 when real (x readout). The
// choice matters: the saturating Pauli axis alternates with the source
// parity in the entangled transfer.
double optimal_readout_axis(const AntennaOffDiag& off);

// Symmetric logarithmic derivative: L_jk = 2 <j|drho|k> / (l_j + l_k) on
// the support, zero elsewhere. drho must be Hermitian and traceless.
Eigen::MatrixXcd sld(const DensityMatrix& rho, const Eigen::MatrixXcd& drho);

// Pure-state QFI 4 (<dpsi|dpsi> - |<psi|dpsi>|^2). Works for statevectors
// and collective coefficient vectors alike.
double qfi_pure(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& dpsi);

// Largest k with qfi/m >= k, clamped to [0, m]: a state reaching this
// value must contain k-partite entanglement.
int entanglement_depth_bound(double qfi, int m);

}  // namespace qfic

#endif  // QFIC_METROLOGY_HPP_
