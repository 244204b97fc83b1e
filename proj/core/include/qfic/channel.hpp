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

#ifndef QFIC_CHANNEL_HPP_
#define QFIC_CHANNEL_HPP_

#include <Eigen/Dense>
#include <vector>

#include "qfic/ising.hpp"
#include "qfic/metrology.hpp"
#include "qfic/statevec.hpp"

namespace qfic {

// Source-in to antenna-out map of the chain, stored through its action on
// the four basis operators |i><j|. Linear, trace preserving, completely
// positive; all three are certified on construction.
class QubitChannel {
 public:
  // generators[2*i + j] = T(|i><j|)
  static QubitChannel from_generators(std::vector<Eigen::Matrix2cd> gens);

  Eigen::Matrix2cd apply(const Eigen::Matrix2cd& rho) const;
  const Eigen::Matrix2cd& generator(int i, int j) const;

 private:
  explicit QubitChannel(std::vector<Eigen::Matrix2cd> gens)
      : gens_(std::move(gens)) {}
  std::vector<Eigen::Matrix2cd> gens_;
};

// Normalized Choi state of a qubit channel: (T x Id)|Phi+><Phi+| with
// |Phi+> = (|00> + |11>)/sqrt2; composite index = 2*output + input.
class ChoiMatrix {
 public:
  static ChoiMatrix from_matrix(Eigen::Matrix4cd j);

  const Eigen::Matrix4cd& j() const { return j_; }

 private:
  explicit ChoiMatrix(Eigen::Matrix4cd j) : j_(std::move(j)) {}
  Eigen::Matrix4cd j_;
};

// The conveyor: embed the single-qubit source state with every other qubit
// along +x, evolve, reduce to the antenna. Diagonal dynamics makes this an
// entanglement-breaking measure-z-and-prepare map for every (J, t).
QubitChannel conveyor(const ChainLayout& layout, const CouplingMatrix& j,
                      double t);

ChoiMatrix choi(const QubitChannel& ch);

// Reconstructs the channel action from its Choi state (used for the
// round-trip certification).
Eigen::Matrix2cd apply_from_choi(const ChoiMatrix& jm,
                                 const Eigen::Matrix2cd& rho);

// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 via Hermitian
// square roots with eigenvalue clamping at zero.
double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// Choi state of the identity (ideal relay) channel, |Phi+><Phi+|.
ChoiMatrix identity_choi();

// Process fidelity of the channel against the ideal relay, raw and after
// the best single-qubit rotation of the output frame. The frame is read
// off the leading Choi eigenvector through a polar decomposition.
struct ProcessFidelity {
  double raw;
  double framed;
  Eigen::Matrix2cd frame;  // the unitary V removed from the output
};
ProcessFidelity process_fidelity_to_relay(const QubitChannel& ch);

// Quadratic-in-theta fit of the in/out state infidelity:
//   1 - F(rho_in(theta), rho_out(theta)) ~ c0 + c2 theta^2.
// Returns c2, to be compared with |F_Q_in - F_Q_out| / 4. Residuals above
// 10% of |c2| raise NumericalError (inconclusive fit).
struct FidelityGapFit {
  double quadratic_coeff;
  double intercept;
  double residual_rms;
};
FidelityGapFit qfi_fidelity_gap(const ThetaFamily& family_in,
                                const ThetaFamily& family_out,
                                const std::vector<double>& theta_grid);

}  // namespace qfic

#endif  // QFIC_CHANNEL_HPP_
