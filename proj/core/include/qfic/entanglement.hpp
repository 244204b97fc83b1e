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

#ifndef QFIC_ENTANGLEMENT_HPP_
#define QFIC_ENTANGLEMENT_HPP_

#include <Eigen/Dense>

#include "qfic/ising.hpp"
#include "qfic/statevec.hpp"

namespace qfic {

// Two-qubit source-antenna state in the ordered product basis
// |-1,-1>, |-1,+1>, |+1,-1>, |+1,+1> (source slot first).
class BipartiteState {
 public:
  static BipartiteState from_density(DensityMatrix rho);

  const DensityMatrix& rho() const { return rho_; }

 private:
  explicit BipartiteState(DensityMatrix rho) : rho_(std::move(rho)) {}
  DensityMatrix rho_;
};

enum class PairSubsystem { First, Second };

// Reduced source-antenna matrix of a single-qubit-source chain (M = 1).
BipartiteState reduce_pair(const PureState& state, const ChainLayout& layout);

// Transpose within the chosen tensor slot; Hermitian and trace-one but not
// necessarily positive.
Eigen::Matrix4cd partial_transpose(const BipartiteState& b,
                                   PairSubsystem subsystem);

// |sum of negative eigenvalues| of the partial transpose; 0 for separable
// pairs, 1/2 for Bell pairs.
double negativity(const BipartiteState& b);

// Closed form for the pinned protocol J1 = 1/2, J2 = 1 with the source
// coupled to the medium at J2 (theta = 0):
//   N(t) = (1/8) |alpha - sqrt(alpha^2 + 16 qfi_an)|,
// alpha = 1 - cos^(N-2)(4t), with qfi_an the transferred QFI at (t, N).
// Not exported for general couplings; the eigensolver path covers those.
double negativity_closed_form(double t, int n, double qfi_an);

// Transferred QFI of the same pinned protocol, sin^2(t) cos^(2(N-2))(2t).
double pinned_protocol_qfi(double t, int n);

// The coupling matrix realizing the pinned protocol on n qubits
// (source {0}, antenna n-1, uniform background J2 elsewhere).
CouplingMatrix pinned_protocol_couplings(int n);
ChainLayout pinned_protocol_layout(int n);

}  // namespace qfic

#endif  // QFIC_ENTANGLEMENT_HPP_
