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

#include "qfic/metrology.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qfic {

namespace {

Eigen::MatrixXcd family_derivative(const ThetaFamily& family, double theta) {
  Eigen::MatrixXcd drho;
  if (family.deriv) {
    drho = family.deriv(theta);
  } else {
    const double h = family.fd_step;
    drho = (family.eval(theta + h) - family.eval(theta - h)) / (2.0 * h);
  }
  const double herm = (drho - drho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-8) {
    throw NumericalError("family derivative not Hermitian, deviation = " +
                         std::to_string(herm));
  }
  return drho;
}

}  // namespace

double qfi_eigendecomp(const ThetaFamily& family, double theta) {
  if (!family.eval) throw ValidationError("family has no eval function");
  const Eigen::MatrixXcd rho = family.eval(theta);
  const Eigen::MatrixXcd drho = family_derivative(family, theta);
  if (rho.rows() != drho.rows() || rho.cols() != drho.cols()) {
    throw ValidationError("rho and drho dimensions differ");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  if (es.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition failed");
  }
  const Eigen::MatrixXcd d_in_eigbasis =
      es.eigenvectors().adjoint() * drho * es.eigenvectors();
  const auto& p = es.eigenvalues();
  double qfi = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    for (Eigen::Index j = 0; j < p.size(); ++j) {
      const double denom = p[i] + p[j];
      if (denom <= kSupportCutoff) continue;
      qfi += 2.0 * std::norm(d_in_eigbasis(j, i)) / denom;
    }
  }
  return qfi;
}

double qfi_qubit(const AntennaOffDiag& off) {
  if (std::abs(off.p - 0.5) > kPsdTol) {
    throw ValidationError("qfi_qubit assumes a balanced antenna (p = 1/2); "
                          "use qfi_eigendecomp otherwise");
  }
  const double mod = std::abs(off.a);
  if (mod > std::sqrt(off.p * (1.0 - off.p)) + kPsdTol) {
    throw ValidationError("|a| violates positivity of the antenna marginal");
  }
  const cdouble frame =
      (mod < 1e-14) ? cdouble(1.0, 0.0) : std::conj(off.a) / mod;
  const cdouble rotated = off.a_dot * frame;
  const double radial = rotated.real();
  const double tangential = rotated.imag();
  // From the eigendecomposition of [[1/2, a], [a*, 1/2]]: the eigenvalues
  // are 1/2 +- |a|, so the radial weight is 1/l+ + 1/l- = 4/(1 - 4|a|^2).
  const double purity_arg = 2.0 * mod;
  const double denom = 1.0 - purity_arg * purity_arg;
  if (purity_arg >= 1.0 - kSupportCutoff) {
    if (std::abs(radial) > 1e-8) {
      throw NumericalError("qubit QFI singular: the marginal is pure while "
                           "the radial derivative is nonzero");
    }
    return 4.0 * tangential * tangential;
  }
  return 4.0 * (radial * radial / denom + tangential * tangential);
}

double cfi_pauli_readout(const std::function<cdouble(double)>& a_of_theta,
                         double chi, double theta,
                         const std::function<cdouble(double)>* a_dot,
                         double fd_step) {
  if (!a_of_theta) throw ValidationError("a_of_theta is empty");
  const cdouble a = a_of_theta(theta);
  cdouble adot;
  if (a_dot != nullptr && *a_dot) {
    adot = (*a_dot)(theta);
  } else {
    adot =
        (a_of_theta(theta + fd_step) - a_of_theta(theta - fd_step)) /
        (2.0 * fd_step);
  }
  // <sigma_chi> = cos(chi) <sigma_y> + sin(chi) <sigma_x> for the balanced
  // antenna marginal, expressed through the coherence a.
  const double mean = std::cos(chi) * (2.0 * a.imag()) +
                      std::sin(chi) * (2.0 * a.real());
  const double slope = std::cos(chi) * (2.0 * adot.imag()) +
                       std::sin(chi) * (2.0 * adot.real());
  const double p_plus = 0.5 * (1.0 + mean);
  const double p_minus = 0.5 * (1.0 - mean);
  if (p_plus <= 0.0 || p_minus <= 0.0) {
    if (std::abs(slope) > 1e-8) {
      throw NumericalError("readout probability hit the boundary with a "
                           "nonzero score");
    }
    throw ValidationError("readout probabilities left (0, 1)");
  }
  // sum over outcomes of pdot^2 / p with pdot = +- slope/2
  return 0.25 * slope * slope * (1.0 / p_plus + 1.0 / p_minus);
}

double cfi_sigma_y(const std::function<cdouble(double)>& a_of_theta,
                   double theta,
                   const std::function<cdouble(double)>* a_dot,
                   double fd_step) {
  return cfi_pauli_readout(a_of_theta, 0.0, theta, a_dot, fd_step);
}

double optimal_readout_axis(const AntennaOffDiag& off) {
  if (std::abs(off.a_dot) < 1e-14) return 0.0;
  // The slope along chi is proportional to
  //   cos(chi) Im(a_dot) + sin(chi) Re(a_dot);
  // the maximizing angle follows from atan2, folded to (-pi/2, pi/2].
  double chi = std::atan2(off.a_dot.real(), off.a_dot.imag());
  if (chi > std::numbers::pi / 2) chi -= std::numbers::pi;
  if (chi <= -std::numbers::pi / 2) chi += std::numbers::pi;
  return chi;
}

Eigen::MatrixXcd sld(const DensityMatrix& rho, const Eigen::MatrixXcd& drho) {
  if (drho.rows() != rho.dim() || drho.cols() != rho.dim()) {
    throw ValidationError("drho dimension mismatch");
  }
  if ((drho - drho.adjoint()).cwiseAbs().maxCoeff() > 1e-8) {
    throw ValidationError("drho must be Hermitian");
  }
  if (std::abs(drho.trace()) > 1e-8) {
    throw ValidationError("drho must be traceless");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.elements());
  if (es.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition failed");
  }
  const Eigen::MatrixXcd d_eig =
      es.eigenvectors().adjoint() * drho * es.eigenvectors();
  const auto& lam = es.eigenvalues();
  Eigen::MatrixXcd l_eig = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  for (Eigen::Index j = 0; j < lam.size(); ++j) {
    for (Eigen::Index k = 0; k < lam.size(); ++k) {
      const double denom = lam[j] + lam[k];
      if (denom <= kSupportCutoff) continue;
      l_eig(j, k) = 2.0 * d_eig(j, k) / denom;
    }
  }
  return es.eigenvectors() * l_eig * es.eigenvectors().adjoint();
}

double qfi_pure(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& dpsi) {
  if (psi.size() != dpsi.size()) {
    throw ValidationError("psi and dpsi lengths differ");
  }
  if (std::abs(psi.norm() - 1.0) > kStructuralTol) {
    throw ValidationError("psi is not normalized");
  }
  const cdouble overlap = psi.dot(dpsi);
  if (std::abs(overlap.real()) > 1e-8) {
    throw ValidationError("Re<psi|dpsi> != 0: the derivative drifts the norm");
  }
  return 4.0 * (dpsi.squaredNorm() - std::norm(overlap));
}

int entanglement_depth_bound(double qfi, int m) {
  if (qfi < 0.0) throw ValidationError("qfi must be non-negative");
  if (m < 1) throw ValidationError("m must be >= 1");
  const int k = static_cast<int>(std::floor(qfi / m + 1e-12));
  return std::max(0, std::min(k, m));
}

}  // namespace qfic
