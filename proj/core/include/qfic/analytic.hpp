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

#ifndef QFIC_ANALYTIC_HPP_
#define QFIC_ANALYTIC_HPP_

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "qfic/metrology.hpp"

namespace qfic {

// Closed forms are expressed in the phase variables phi_i = 2 t J_i rather
// than in (t, J1, J2); phis_from_couplings is the only adapter.
struct TransferSetting {
  int m = 1;        // source size
  int mu = 0;       // medium size
  double phi1 = 0;  // 2 t J_source_antenna
  double phi2 = 0;  // 2 t J_medium_antenna
  double theta = 0;
};

TransferSetting phis_from_couplings(int m, int mu, double j1, double j2,
                                    double t, double theta);

// One branch of a classically correlated source x medium preparation.
struct MixtureTerm {
  double weight = 1.0;
  cdouble f{1.0, 0.0};  // source factor
  cdouble g{1.0, 0.0};  // medium factor
};

// Source factor of the separable product preparation:
//   [cos(phi1) + i sin(theta) sin(phi1)]^M.
cdouble f_separable(const TransferSetting& s);

// Medium factor cos^mu(phi2); the empty product is 1.
double g_medium(const TransferSetting& s);

// Antenna coherence for the separable source: a = (1/2) F G, with the
// analytic theta-derivative and p = 1/2.
AntennaOffDiag offdiag_separable(const TransferSetting& s);

// Antenna coherence for the GHZ source:
//   a = (1/2) [cos^M(phi1) + s_M sin(M theta) sin^M(phi1)] cos^mu(phi2),
// where s_M = -(-i)^M (equal to i^M for odd M). The sign follows from the
// rotation convention exp(-i theta J_y) applied to (|+>_y + i|->_y)/sqrt2
// and is pinned by the statevector oracle for every parity.
AntennaOffDiag offdiag_ghz(const TransferSetting& s);

// Weighted coherence of a classically correlated preparation:
//   a = sum_i p_i f_i g_i.
cdouble offdiag_mixture(const std::vector<MixtureTerm>& terms);

// Collective-sector transfer: a(theta) =
//   (1/2) cos^mu(phi2) sum_n p_n(theta) exp(-i phi1 (2n - M)).
// probs returns the z-basis populations of the rotated source; dprobs,
// when given, supplies the analytic derivative (central differences with
// step fd_step otherwise).
struct CollectiveProbs {
  std::function<Eigen::VectorXd(double)> probs;
  std::function<Eigen::VectorXd(double)> dprobs;  // optional
  double fd_step = kCentralDiffStep;
};

AntennaOffDiag offdiag_collective(const CollectiveProbs& probs, double phi1,
                                  int mu, double phi2, double theta);

// Optimal separable working point for m >= 2:
//   phi1 = arctan((m-1)^{-1/2}), transferred QFI m (1 - 1/m)^{m-1},
// approaching m/e from above.
struct SeparableOptimum {
  double phi1;
  double qfi;
};
SeparableOptimum optimal_separable(int m);

// Lossless single-qubit setting: J1/J2 = 1/2 at t J2 = pi/2, i.e.
// phi1 = pi/2 and phi2 = pi, reaching QFI = 1 for any medium size.
struct SingleQubitOptimum {
  double j_ratio;  // J1 / J2
  double t_units;  // t * J2
};
SingleQubitOptimum optimal_single();

// Resonance envelope of the transferred signal around t = m pi / (2 J2):
// exact cos^{2 mu}(2 J2 t) against the Gaussian exp(-mu (2 J2 t - m pi)^2).
struct FinetuneEnvelope {
  double exact;
  double gauss;
};
FinetuneEnvelope finetune_envelope(int mu, double j2, double t, int m);

// QFI transferred when fed through qfi_qubit at the given setting; thin
// convenience wrappers used by sweeps.
double qfi_separable(const TransferSetting& s);
double qfi_ghz(const TransferSetting& s);

}  // namespace qfic

#endif  // QFIC_ANALYTIC_HPP_
