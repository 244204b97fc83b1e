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

#ifndef QFIC_STATEVEC_HPP_
#define QFIC_STATEVEC_HPP_

#include <Eigen/Dense>
#include <vector>

#include "qfic/common.hpp"

namespace qfic {

// Exact statevector representation of an n-qubit register.
//
// Conventions, used consistently across the whole library:
//   * qubit i is the i-th least significant bit of the basis index;
//   * bit 0 encodes the sigma_z eigenvalue +1, bit 1 encodes -1;
//   * |+1>_x = (|+1>_z + |-1>_z)/sqrt2, |+1>_y = (|+1>_z + i|-1>_z)/sqrt2.

enum class Axis { X, Y, Z };

struct BasisAxis {
  Axis axis = Axis::Z;
  int sign = +1;  // +1 or -1
};

// Single-qubit eigenstate of the chosen Pauli operator.
Eigen::Vector2cd axis_eigenstate(BasisAxis b);

// Memory guard for statevector allocation. Defaults to 24 qubits; the
// environment variable QFI_CONVEYOR_MAX_QUBITS may raise or lower it, with
// a hard ceiling of 26.
int max_qubits();

class PureState {
 public:
  // Validates the length (2^n) and unit norm before accepting the vector.
  static PureState from_amplitudes(int n_qubits, Eigen::VectorXcd amplitudes);

  int n_qubits() const { return n_qubits_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Eigen::Index dim() const { return amplitudes_.size(); }

 private:
  PureState(int n_qubits, Eigen::VectorXcd amplitudes);

  int n_qubits_;
  Eigen::VectorXcd amplitudes_;
};

class DensityMatrix {
 public:
  // Validates hermiticity and unit trace; for dimensions up to 512 also
  // certifies the spectrum against the PSD tolerance.
  static DensityMatrix from_matrix(Eigen::MatrixXcd elements);

  int dim() const { return static_cast<int>(elements_.rows()); }
  const Eigen::MatrixXcd& elements() const { return elements_; }

 private:
  explicit DensityMatrix(Eigen::MatrixXcd elements);

  Eigen::MatrixXcd elements_;
};

// n-fold tensor power of a single-qubit Pauli eigenstate.
PureState product_state(int n, BasisAxis axis);

// Applies a 2x2 unitary to one tensor factor. The matrix is checked for
// unitarity within kStructuralTol.
PureState apply_single_qubit(const PureState& state, int qubit,
                             const Eigen::Matrix2cd& u);

// Reduced density matrix over the kept qubits. `keep` must be strictly
// ascending and non-empty; result qubit j corresponds to keep[j].
DensityMatrix partial_trace(const PureState& state,
                            const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

// Tr_rest |ket><bra| for two states on the same register. Not Hermitian in
// general; this is the workhorse behind exact derivatives of marginals.
// The raw-vector overload accepts unnormalized vectors (derivatives).
Eigen::MatrixXcd cross_partial_trace(const PureState& ket,
                                     const PureState& bra,
                                     const std::vector<int>& keep);
Eigen::MatrixXcd cross_partial_trace(const Eigen::VectorXcd& ket,
                                     const Eigen::VectorXcd& bra,
                                     int n_qubits,
                                     const std::vector<int>& keep);

// Tr[rho * obs] for a Hermitian observable; the imaginary residue is
// checked against kStructuralTol and discarded.
double expectation(const DensityMatrix& rho, const Eigen::MatrixXcd& obs);

// Common single-qubit operators.
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();
// exp(-i(angle/2) sigma_axis)
Eigen::Matrix2cd rotation(Axis axis, double angle);

}  // namespace qfic

#endif  // QFIC_STATEVEC_HPP_
