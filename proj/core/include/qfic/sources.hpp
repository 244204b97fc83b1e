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

#ifndef QFIC_SOURCES_HPP_
#define QFIC_SOURCES_HPP_

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "qfic/ising.hpp"
#include "qfic/statevec.hpp"

namespace qfic {

// Collective (permutation-symmetric) state of M source qubits in the Dicke
// basis |n, M-n>, n = number of qubits along +z. Coefficient index = n.
class SymmetricState {
 public:
  static SymmetricState from_coeffs(int m, Eigen::VectorXcd coeffs);

  int m() const { return m_; }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }

 private:
  SymmetricState(int m, Eigen::VectorXcd coeffs)
      : m_(m), coeffs_(std::move(coeffs)) {}
  int m_;
  Eigen::VectorXcd coeffs_;
};

enum class SourceKind { Separable, Ghz, Oat };

struct SourceSpec {
  SourceKind kind = SourceKind::Separable;
  int m = 1;
  double oat_time = 0.0;  // U*t, used only for Oat
  double theta = 0.0;

  // Throws on malformed fields; returns a warning string for values that
  // are legal but outside the usual sweep window (oat_time beyond pi/2).
  std::optional<std::string> validate() const;
};

// Collective J_y = (1/2) sum_i sigma_y^(i) restricted to the symmetric
// sector: an (M+1)x(M+1) anti-Hermitian-off-diagonal tridiagonal matrix.
Eigen::MatrixXcd jy_matrix(int m);

// exp(-i theta J_y) applied through an eigendecomposition of jy_matrix.
SymmetricState rotate_y(const SymmetricState& s, double theta);

// sqrt(binom(M,n)/2^M): the +x coherent state, evaluated stably via lgamma.
double coherent_x_coeff(int m, int n);

// GHZ source (|+>_y^M + i|->_y^M)/sqrt2 rotated by exp(-i theta J_y).
// The theta = 0 coefficients follow the closed form
//   C_n(0) = (1/sqrt2) sqrt(binom(M,n)/2^M) i^(M-n) (1 + i(-1)^(M-n)).
SymmetricState ghz_state(int m, double theta);

// z-basis GHZ (|all +z> + e^{iM theta} |all -z>)/sqrt2, the frame used by
// the parity-readout calibration analysis.
SymmetricState ghz_z_state(int m, double theta);

// One-axis-twisted source: the +x coherent state evolved with the
// twisting generator U (J_z^2 + lambda_M J_z) and then rotated by
// exp(-i theta J_y). The compensation coefficient lambda_M = (1 - M) mod 4
// (reduced into {-1, 0, 1, 2}) aims the cat axis so that Ut = pi/2 lands
// exactly on ghz_state for every source size, while keeping the frame
// rotation rate bounded by 2U across the sweep; any representative of the
// mod-4 class gives the same endpoint up to a global phase. On the full
// chain this is pair couplings U/2 plus a longitudinal source field
// U lambda_M / 2 per qubit.
SymmetricState oat_state(int m, double oat_time, double theta);

// The longitudinal compensation coefficient lambda_M described above.
int oat_frame_coefficient(int m);

// Tensor the collective source into the full chain, with every non-source
// qubit prepared along +x.
PureState embed_symmetric(const SymmetricState& sym, const ChainLayout& layout);

// exp(-i(theta/2) sigma_y) on every source qubit; identical to
// exp(-i theta J_y) on the collective sector.
PureState imprint_phase(const PureState& state, const ChainLayout& layout,
                        double theta);

// 4 Var(J_y): the phase information carried by a pure collective source.
double source_qfi(const SymmetricState& s);

}  // namespace qfic

#endif  // QFIC_SOURCES_HPP_
