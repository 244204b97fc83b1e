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

#include "qfic/sources.hpp"

#include <cmath>
#include <numbers>

namespace qfic {

SymmetricState SymmetricState::from_coeffs(int m, Eigen::VectorXcd coeffs) {
  if (m < 1) throw ValidationError("collective source needs m >= 1");
  if (coeffs.size() != m + 1) {
    throw ValidationError("coefficient vector must have length m + 1");
  }
  const double norm2 = coeffs.squaredNorm();
  if (std::abs(norm2 - 1.0) > kStructuralTol) {
    throw ValidationError("collective state is not normalized");
  }
  return SymmetricState(m, std::move(coeffs));
}

std::optional<std::string> SourceSpec::validate() const {
  if (m < 1) throw ValidationError("source size m must be >= 1");
  if (kind == SourceKind::Oat) {
    if (oat_time < 0.0) throw ValidationError("oat_time must be >= 0");
    if (oat_time > std::numbers::pi / 2 + 1e-12) {
      return "oat_time " + std::to_string(oat_time) +
             " is beyond the usual sweep window [0, pi/2]";
    }
  }
  return std::nullopt;
}

Eigen::MatrixXcd jy_matrix(int m) {
  if (m < 1) throw ValidationError("jy_matrix needs m >= 1");
  Eigen::MatrixXcd jy = Eigen::MatrixXcd::Zero(m + 1, m + 1);
  const double j = m / 2.0;
  for (int n = 0; n < m; ++n) {
    const double mz = n - j;
    const double amp = std::sqrt(j * (j + 1) - mz * (mz + 1));
    jy(n + 1, n) = cdouble(0.0, -0.5) * amp;  // (J+ - J-)/(2i)
    jy(n, n + 1) = cdouble(0.0, +0.5) * amp;
  }
  return jy;
}

SymmetricState rotate_y(const SymmetricState& s, double theta) {
  const int m = s.m();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(jy_matrix(m));
  if (es.info() != Eigen::Success) {
    throw NumericalError("J_y eigendecomposition failed");
  }
  Eigen::VectorXcd phases(m + 1);
  for (int k = 0; k <= m; ++k) {
    phases[k] = std::polar(1.0, -theta * es.eigenvalues()[k]);
  }
  Eigen::VectorXcd out =
      es.eigenvectors() *
      (phases.asDiagonal() * (es.eigenvectors().adjoint() * s.coeffs()));
  // The rotation is unitary; renormalize the last-digit drift so downstream
  // validation stays within kStructuralTol even after long compositions.
  const double norm = out.norm();
  if (std::abs(norm - 1.0) > kPsdTol) {
    throw NumericalError("collective rotation lost unitarity");
  }
  out /= norm;
  return SymmetricState::from_coeffs(m, std::move(out));
}

double coherent_x_coeff(int m, int n) {
  const double log_binom =
      std::lgamma(m + 1.0) - std::lgamma(n + 1.0) - std::lgamma(m - n + 1.0);
  return std::exp(0.5 * (log_binom - m * std::numbers::ln2));
}

SymmetricState ghz_state(int m, double theta) {
  if (m < 1) throw ValidationError("ghz_state needs m >= 1");
  Eigen::VectorXcd c(m + 1);
  const cdouble i(0.0, 1.0);
  for (int n = 0; n <= m; ++n) {
    const double parity = ((m - n) % 2 == 0) ? 1.0 : -1.0;
    cdouble ipow;
    switch ((m - n) % 4) {
      case 0: ipow = {1, 0}; break;
      case 1: ipow = {0, 1}; break;
      case 2: ipow = {-1, 0}; break;
      default: ipow = {0, -1}; break;
    }
    c[n] = (coherent_x_coeff(m, n) / std::sqrt(2.0)) * ipow *
           (cdouble(1.0, 0.0) + i * parity);
  }
  SymmetricState base = SymmetricState::from_coeffs(m, std::move(c));
  if (theta == 0.0) return base;
  return rotate_y(base, theta);
}

SymmetricState ghz_z_state(int m, double theta) {
  if (m < 1) throw ValidationError("ghz_z_state needs m >= 1");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(m + 1);
  c[m] = 1.0 / std::sqrt(2.0);
  c[0] = std::polar(1.0 / std::sqrt(2.0), m * theta);
  return SymmetricState::from_coeffs(m, std::move(c));
}

int oat_frame_coefficient(int m) {
  // (1 - m) reduced mod 4 into {-1, 0, 1, 2}; shifting by multiples of 4
  // changes the Ut = pi/2 endpoint only by a global phase.
  const int r = (((1 - m) % 4) + 4) % 4;
  return (r == 3) ? -1 : r;
}

SymmetricState oat_state(int m, double oat_time, double theta) {
  if (m < 1) throw ValidationError("oat_state needs m >= 1");
  const double lambda = oat_frame_coefficient(m);
  Eigen::VectorXcd c(m + 1);
  for (int n = 0; n <= m; ++n) {
    const double k = n - m / 2.0;
    c[n] = coherent_x_coeff(m, n) *
           std::polar(1.0, -oat_time * (k * k + lambda * k));
  }
  SymmetricState twisted = SymmetricState::from_coeffs(m, std::move(c));
  if (theta == 0.0) return twisted;
  return rotate_y(twisted, theta);
}

PureState embed_symmetric(const SymmetricState& sym,
                          const ChainLayout& layout) {
  if (sym.m() != layout.source_size()) {
    throw ValidationError("collective state size does not match the layout");
  }
  const int n = layout.n_qubits();
  if (n > max_qubits()) {
    throw CapacityError("embed_symmetric: chain of " + std::to_string(n) +
                        " qubits exceeds the cap of " +
                        std::to_string(max_qubits()));
  }
  Eigen::Index source_mask = 0;
  for (int q : layout.source()) source_mask |= Eigen::Index{1} << q;

  const int m = sym.m();
  // Per-n amplitude of one source configuration inside the Dicke state.
  std::vector<cdouble> per_config(m + 1);
  for (int nn = 0; nn <= m; ++nn) {
    const double log_binom = std::lgamma(m + 1.0) - std::lgamma(nn + 1.0) -
                             std::lgamma(m - nn + 1.0);
    per_config[nn] = sym.coeffs()[nn] * std::exp(-0.5 * log_binom);
  }
  const double rest_amp = std::pow(1.0 / std::sqrt(2.0), n - m);
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd amps(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const int downs = static_cast<int>(__builtin_popcountll(
        static_cast<unsigned long long>(k & source_mask)));
    amps[k] = per_config[m - downs] * rest_amp;
  }
  return PureState::from_amplitudes(n, std::move(amps));
}

PureState imprint_phase(const PureState& state, const ChainLayout& layout,
                        double theta) {
  if (layout.n_qubits() != state.n_qubits()) {
    throw ValidationError("layout does not match the register");
  }
  if (theta == 0.0) return state;
  PureState out = state;
  const Eigen::Matrix2cd u = rotation(Axis::Y, theta);
  for (int q : layout.source()) out = apply_single_qubit(out, q, u);
  return out;
}

double source_qfi(const SymmetricState& s) {
  const Eigen::MatrixXcd jy = jy_matrix(s.m());
  const Eigen::VectorXcd jpsi = jy * s.coeffs();
  const double mean = std::real(s.coeffs().dot(jpsi));
  const double second = std::real(jpsi.squaredNorm());
  return 4.0 * (second - mean * mean);
}

}  // namespace qfic
