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

#include "qfic/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace qfic {

namespace {

constexpr int kDefaultMaxQubits = 24;
constexpr int kHardMaxQubits = 26;

// Spectral certification is skipped above this dimension; the artifact only
// builds small reduced matrices, so the cap never bites in practice.
constexpr int kPsdCheckMaxDim = 512;

int read_max_qubits_env() {
  const char* env = std::getenv("QFI_CONVEYOR_MAX_QUBITS");
  if (env == nullptr) return kDefaultMaxQubits;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return kDefaultMaxQubits;
  return static_cast<int>(std::min<long>(v, kHardMaxQubits));
}

}  // namespace

int max_qubits() {
  static const int cap = read_max_qubits_env();
  return cap;
}

Eigen::Vector2cd axis_eigenstate(BasisAxis b) {
  if (b.sign != +1 && b.sign != -1) {
    throw ValidationError("BasisAxis sign must be +1 or -1");
  }
  const double s = static_cast<double>(b.sign);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::Vector2cd v;
  switch (b.axis) {
    case Axis::Z:
      v << (b.sign > 0 ? 1.0 : 0.0), (b.sign > 0 ? 0.0 : 1.0);
      break;
    case Axis::X:
      v << inv_sqrt2, s * inv_sqrt2;
      break;
    case Axis::Y:
      v << inv_sqrt2, cdouble(0.0, s * inv_sqrt2);
      break;
  }
  return v;
}

PureState::PureState(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

PureState PureState::from_amplitudes(int n_qubits,
                                     Eigen::VectorXcd amplitudes) {
  if (n_qubits < 1 || n_qubits > max_qubits()) {
    throw CapacityError("n_qubits = " + std::to_string(n_qubits) +
                        " outside [1, " + std::to_string(max_qubits()) + "]");
  }
  if (amplitudes.size() != (Eigen::Index{1} << n_qubits)) {
    throw ValidationError("amplitude vector length must be 2^n_qubits");
  }
  const double norm2 = amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > kStructuralTol) {
    throw ValidationError("state is not normalized: |psi|^2 = " +
                          std::to_string(norm2));
  }
  return PureState(n_qubits, std::move(amplitudes));
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd elements)
    : elements_(std::move(elements)) {}

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw ValidationError("density matrix must be square and non-empty");
  }
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kStructuralTol) {
    throw ValidationError("density matrix not Hermitian, deviation = " +
                          std::to_string(herm));
  }
  const double tr_err = std::abs(m.trace() - cdouble(1.0, 0.0));
  if (tr_err > kStructuralTol) {
    throw ValidationError("density matrix trace differs from 1 by " +
                          std::to_string(tr_err));
  }
  if (m.rows() <= kPsdCheckMaxDim) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m,
                                                       Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -kPsdTol) {
      throw ValidationError("density matrix has eigenvalue " +
                            std::to_string(min_eig));
    }
  }
  return DensityMatrix(std::move(m));
}

PureState product_state(int n, BasisAxis axis) {
  if (n < 1 || n > max_qubits()) {
    throw CapacityError("product_state: n = " + std::to_string(n) +
                        " outside [1, " + std::to_string(max_qubits()) + "]");
  }
  const Eigen::Vector2cd q = axis_eigenstate(axis);
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd amps(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    cdouble a = 1.0;
    for (int i = 0; i < n; ++i) a *= q[(k >> i) & 1];
    amps[k] = a;
  }
  return PureState::from_amplitudes(n, std::move(amps));
}

PureState apply_single_qubit(const PureState& state, int qubit,
                             const Eigen::Matrix2cd& u) {
  if (qubit < 0 || qubit >= state.n_qubits()) {
    throw ValidationError("qubit index " + std::to_string(qubit) +
                          " out of range");
  }
  const double udev =
      (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  if (udev > kStructuralTol) {
    throw ValidationError("single-qubit operator is not unitary, deviation = " +
                          std::to_string(udev));
  }
  const Eigen::Index dim = state.dim();
  const Eigen::Index step = Eigen::Index{1} << qubit;
  Eigen::VectorXcd out(dim);
  const Eigen::VectorXcd& in = state.amplitudes();
  for (Eigen::Index k = 0; k < dim; ++k) {
    if ((k & step) == 0) {
      const cdouble a0 = in[k];
      const cdouble a1 = in[k | step];
      out[k] = u(0, 0) * a0 + u(0, 1) * a1;
      out[k | step] = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
  return PureState::from_amplitudes(state.n_qubits(), std::move(out));
}

namespace {

void check_keep(const std::vector<int>& keep, int n_qubits) {
  if (keep.empty()) throw ValidationError("keep list must be non-empty");
  for (size_t j = 0; j < keep.size(); ++j) {
    if (keep[j] < 0 || keep[j] >= n_qubits) {
      throw ValidationError("keep index out of range");
    }
    if (j > 0 && keep[j] <= keep[j - 1]) {
      throw ValidationError("keep list must be strictly ascending");
    }
  }
}

// Scatter the bits of `packed` (one per listed qubit) into a basis index.
inline Eigen::Index scatter(Eigen::Index packed, const std::vector<int>& qs) {
  Eigen::Index out = 0;
  for (size_t j = 0; j < qs.size(); ++j) {
    out |= ((packed >> j) & 1) << qs[j];
  }
  return out;
}

Eigen::MatrixXcd cross_trace_impl(const Eigen::VectorXcd& kv,
                                  const Eigen::VectorXcd& bv, int n,
                                  const std::vector<int>& keep) {
  std::vector<int> rest;
  rest.reserve(n - keep.size());
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(keep.begin(), keep.end(), q)) rest.push_back(q);
  }
  const Eigen::Index kd = Eigen::Index{1} << keep.size();
  const Eigen::Index rd = Eigen::Index{1} << rest.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kd, kd);
  for (Eigen::Index r = 0; r < rd; ++r) {
    const Eigen::Index base = scatter(r, rest);
    for (Eigen::Index a = 0; a < kd; ++a) {
      const cdouble ka = kv[base | scatter(a, keep)];
      if (ka == cdouble(0.0, 0.0)) continue;
      for (Eigen::Index b = 0; b < kd; ++b) {
        out(a, b) += ka * std::conj(bv[base | scatter(b, keep)]);
      }
    }
  }
  return out;
}

}  // namespace

DensityMatrix partial_trace(const PureState& state,
                            const std::vector<int>& keep) {
  check_keep(keep, state.n_qubits());
  return DensityMatrix::from_matrix(cross_trace_impl(
      state.amplitudes(), state.amplitudes(), state.n_qubits(), keep));
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  int n = 0;
  while ((Eigen::Index{1} << n) < rho.dim()) ++n;
  if ((Eigen::Index{1} << n) != rho.dim()) {
    throw ValidationError("density matrix dimension is not a power of two");
  }
  check_keep(keep, n);
  std::vector<int> rest;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(keep.begin(), keep.end(), q)) rest.push_back(q);
  }
  const Eigen::Index kd = Eigen::Index{1} << keep.size();
  const Eigen::Index rd = Eigen::Index{1} << rest.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kd, kd);
  for (Eigen::Index r = 0; r < rd; ++r) {
    const Eigen::Index base = scatter(r, rest);
    for (Eigen::Index a = 0; a < kd; ++a) {
      for (Eigen::Index b = 0; b < kd; ++b) {
        out(a, b) +=
            rho.elements()(base | scatter(a, keep), base | scatter(b, keep));
      }
    }
  }
  return DensityMatrix::from_matrix(std::move(out));
}

Eigen::MatrixXcd cross_partial_trace(const PureState& ket,
                                     const PureState& bra,
                                     const std::vector<int>& keep) {
  if (ket.n_qubits() != bra.n_qubits()) {
    throw ValidationError("cross_partial_trace: register sizes differ");
  }
  check_keep(keep, ket.n_qubits());
  return cross_trace_impl(ket.amplitudes(), bra.amplitudes(), ket.n_qubits(),
                          keep);
}

Eigen::MatrixXcd cross_partial_trace(const Eigen::VectorXcd& ket,
                                     const Eigen::VectorXcd& bra,
                                     int n_qubits,
                                     const std::vector<int>& keep) {
  if (ket.size() != bra.size() ||
      ket.size() != (Eigen::Index{1} << n_qubits)) {
    throw ValidationError("cross_partial_trace: vector sizes inconsistent");
  }
  check_keep(keep, n_qubits);
  return cross_trace_impl(ket, bra, n_qubits, keep);
}

double expectation(const DensityMatrix& rho, const Eigen::MatrixXcd& obs) {
  if (obs.rows() != rho.dim() || obs.cols() != rho.dim()) {
    throw ValidationError("observable dimension mismatch");
  }
  const double herm = (obs - obs.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kStructuralTol) {
    throw ValidationError("observable not Hermitian, deviation = " +
                          std::to_string(herm));
  }
  const cdouble val = (rho.elements() * obs).trace();
  if (std::abs(val.imag()) > kStructuralTol) {
    throw NumericalError("expectation value has imaginary part " +
                         std::to_string(val.imag()));
  }
  return val.real();
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, cdouble(0, -1), cdouble(0, 1), 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd rotation(Axis axis, double angle) {
  Eigen::Matrix2cd sigma;
  switch (axis) {
    case Axis::X: sigma = pauli_x(); break;
    case Axis::Y: sigma = pauli_y(); break;
    case Axis::Z: sigma = pauli_z(); break;
  }
  const double half = 0.5 * angle;
  return std::cos(half) * Eigen::Matrix2cd::Identity() -
         cdouble(0, 1) * std::sin(half) * sigma;
}

}  // namespace qfic
