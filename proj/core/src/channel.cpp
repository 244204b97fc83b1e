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

#include "qfic/channel.hpp"

#include <cmath>
#include <string>

namespace qfic {

namespace {

// Square roots amplify eigenvalue roundoff (sqrt of 1e-16 is 1e-8), so
// spectra are clamped with a relative floor before taking roots.
Eigen::VectorXd clamped_spectrum(const Eigen::VectorXd& lam) {
  const double floor_at = 1e-13 * std::max(lam.cwiseAbs().maxCoeff(), 1e-30);
  Eigen::VectorXd out = lam;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out[i] < floor_at) out[i] = 0.0;
  }
  return out;
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success) {
    throw NumericalError("matrix square root: eigendecomposition failed");
  }
  Eigen::VectorXd lam = clamped_spectrum(es.eigenvalues());
  for (Eigen::Index i = 0; i < lam.size(); ++i) lam[i] = std::sqrt(lam[i]);
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::Matrix4cd choi_from_generators(
    const std::vector<Eigen::Matrix2cd>& gens) {
  Eigen::Matrix4cd jm = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Eigen::Matrix2cd& t = gens[2 * i + j];
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          jm(2 * a + i, 2 * b + j) += 0.5 * t(a, b);
        }
      }
    }
  }
  return jm;
}

}  // namespace

QubitChannel QubitChannel::from_generators(
    std::vector<Eigen::Matrix2cd> gens) {
  if (gens.size() != 4) {
    throw ValidationError("a qubit channel needs 4 generator images");
  }
  // Hermiticity pairing: T(|j><i|) must be the adjoint of T(|i><j|).
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double dev =
          (gens[2 * i + j] - gens[2 * j + i].adjoint()).cwiseAbs().maxCoeff();
      if (dev > kPsdTol) {
        throw ValidationError("channel generators break hermiticity pairing");
      }
    }
  }
  // Trace preservation: Tr T(|i><j|) = delta_ij.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const cdouble tr = gens[2 * i + j].trace();
      const cdouble expect = (i == j) ? cdouble(1, 0) : cdouble(0, 0);
      if (std::abs(tr - expect) > kPsdTol) {
        throw ValidationError("channel is not trace preserving");
      }
    }
  }
  // Complete positivity via the Choi spectrum.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(
      choi_from_generators(gens), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTol) {
    throw ValidationError("channel is not completely positive; Choi "
                          "eigenvalue " +
                          std::to_string(es.eigenvalues().minCoeff()));
  }
  return QubitChannel(std::move(gens));
}

Eigen::Matrix2cd QubitChannel::apply(const Eigen::Matrix2cd& rho) const {
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out += rho(i, j) * gens_[2 * i + j];
    }
  }
  return out;
}

const Eigen::Matrix2cd& QubitChannel::generator(int i, int j) const {
  if (i < 0 || i > 1 || j < 0 || j > 1) {
    throw ValidationError("generator index out of range");
  }
  return gens_[2 * i + j];
}

QubitChannel conveyor(const ChainLayout& layout, const CouplingMatrix& j,
                      double t) {
  if (layout.source_size() != 1) {
    throw ValidationError("conveyor is implemented for single-qubit sources "
                          "(input dimension 2)");
  }
  if (j.n() != layout.n_qubits()) {
    throw ValidationError("coupling matrix does not match the layout");
  }
  const int n = layout.n_qubits();
  const int src = layout.source()[0];
  const Eigen::Index dim = Eigen::Index{1} << n;

  // Evolved embeddings of the two source basis states.
  std::vector<PureState> branches;
  branches.reserve(2);
  const Eigen::Vector2cd plus_x = axis_eigenstate({Axis::X, +1});
  for (int i = 0; i < 2; ++i) {
    Eigen::VectorXcd amps(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
      cdouble a = (((k >> src) & 1) == i) ? cdouble(1, 0) : cdouble(0, 0);
      if (a != cdouble(0, 0)) {
        for (int q = 0; q < n; ++q) {
          if (q == src) continue;
          a *= plus_x[(k >> q) & 1];
        }
      }
      amps[k] = a;
    }
    branches.push_back(
        evolve(PureState::from_amplitudes(n, std::move(amps)), j, t));
  }

  std::vector<Eigen::Matrix2cd> gens(4);
  const std::vector<int> keep = {layout.antenna()};
  for (int i = 0; i < 2; ++i) {
    for (int jj = 0; jj < 2; ++jj) {
      gens[2 * i + jj] =
          cross_partial_trace(branches[i], branches[jj], keep);
    }
  }
  return QubitChannel::from_generators(std::move(gens));
}

ChoiMatrix ChoiMatrix::from_matrix(Eigen::Matrix4cd jm) {
  if ((jm - jm.adjoint()).cwiseAbs().maxCoeff() > kPsdTol) {
    throw ValidationError("Choi matrix not Hermitian");
  }
  if (std::abs(jm.trace() - cdouble(1, 0)) > kPsdTol) {
    throw ValidationError("Choi matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(jm,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTol) {
    throw ValidationError("Choi matrix not PSD: eigenvalue " +
                          std::to_string(es.eigenvalues().minCoeff()));
  }
  // Trace preservation: partial trace over the output leg must be I/2.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      cdouble sum = 0.0;
      for (int a = 0; a < 2; ++a) sum += jm(2 * a + i, 2 * a + j);
      const cdouble expect = (i == j) ? cdouble(0.5, 0) : cdouble(0, 0);
      if (std::abs(sum - expect) > kPsdTol) {
        throw ValidationError("Choi input marginal is not I/2");
      }
    }
  }
  return ChoiMatrix(std::move(jm));
}

ChoiMatrix choi(const QubitChannel& ch) {
  std::vector<Eigen::Matrix2cd> gens;
  gens.reserve(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) gens.push_back(ch.generator(i, j));
  }
  return ChoiMatrix::from_matrix(choi_from_generators(gens));
}

Eigen::Matrix2cd apply_from_choi(const ChoiMatrix& jm,
                                 const Eigen::Matrix2cd& rho) {
  // T(rho)_{ab} = 2 sum_{ij} J[(a,i),(b,j)] rho_{ij}
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      cdouble sum = 0.0;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          sum += jm.j()(2 * a + i, 2 * b + j) * rho(i, j);
        }
      }
      out(a, b) = 2.0 * sum;
    }
  }
  return out;
}

double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw ValidationError("fidelity needs equal dimensions");
  }
  const Eigen::MatrixXcd root = psd_sqrt(rho.elements());
  const Eigen::MatrixXcd inner = root * sigma.elements() * root;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(inner,
                                                     Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalError("fidelity eigendecomposition failed");
  }
  const Eigen::VectorXd lam = clamped_spectrum(es.eigenvalues());
  double tr = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) tr += std::sqrt(lam[i]);
  const double f = tr * tr;
  return std::min(f, 1.0);
}

ChoiMatrix identity_choi() {
  Eigen::Matrix4cd jm = Eigen::Matrix4cd::Zero();
  // |Phi+><Phi+| with composite index 2*output + input.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) jm(2 * i + i, 2 * j + j) = 0.5;
  }
  return ChoiMatrix::from_matrix(jm);
}

ProcessFidelity process_fidelity_to_relay(const QubitChannel& ch) {
  const ChoiMatrix jc = choi(ch);
  const DensityMatrix jd = DensityMatrix::from_matrix(jc.j());
  const DensityMatrix relay = DensityMatrix::from_matrix(identity_choi().j());

  ProcessFidelity out;
  out.raw = uhlmann_fidelity(jd, relay);

  // Closest output rotation: unvec the leading Choi eigenvector and take
  // the unitary factor of its polar decomposition.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(jc.j());
  const Eigen::Vector4cd lead = es.eigenvectors().col(3);
  Eigen::Matrix2cd w;
  w << lead[0], lead[1], lead[2], lead[3];  // row = output, col = input
  w *= std::sqrt(2.0);
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(
      w, Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.frame = svd.matrixU() * svd.matrixV().adjoint();

  std::vector<Eigen::Matrix2cd> framed;
  framed.reserve(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      framed.push_back(out.frame.adjoint() * ch.generator(i, j) * out.frame);
    }
  }
  const ChoiMatrix jf = choi(QubitChannel::from_generators(std::move(framed)));
  out.framed = uhlmann_fidelity(DensityMatrix::from_matrix(jf.j()), relay);
  return out;
}

FidelityGapFit qfi_fidelity_gap(const ThetaFamily& family_in,
                                const ThetaFamily& family_out,
                                const std::vector<double>& theta_grid) {
  if (theta_grid.size() < 3) {
    throw ValidationError("theta grid needs at least 3 points");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(theta_grid.size());
  Eigen::MatrixXd design(rows, 2);
  Eigen::VectorXd y(rows);
  for (Eigen::Index k = 0; k < rows; ++k) {
    const double th = theta_grid[k];
    const DensityMatrix rin = DensityMatrix::from_matrix(family_in.eval(th));
    const DensityMatrix rout = DensityMatrix::from_matrix(family_out.eval(th));
    y[k] = 1.0 - uhlmann_fidelity(rin, rout);
    design(k, 0) = 1.0;
    design(k, 1) = th * th;
  }
  const Eigen::Vector2d coef =
      design.colPivHouseholderQr().solve(y);
  const double rms = std::sqrt((design * coef - y).squaredNorm() / rows);
  FidelityGapFit fit;
  fit.intercept = coef[0];
  fit.quadratic_coeff = coef[1];
  fit.residual_rms = rms;
  if (std::abs(fit.quadratic_coeff) > 1e-9 &&
      rms > 0.1 * std::abs(fit.quadratic_coeff)) {
    throw NumericalError("fidelity gap fit inconclusive: residual " +
                         std::to_string(rms) + " vs coefficient " +
                         std::to_string(fit.quadratic_coeff));
  }
  return fit;
}

}  // namespace qfic
