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

#include "qfic/bruteforce.hpp"

#include <cmath>

namespace qfic {

namespace {

SymmetricState source_state(const SourceSpec& spec) {
  switch (spec.kind) {
    case SourceKind::Ghz:
      return ghz_state(spec.m, 0.0);
    case SourceKind::Oat:
      return oat_state(spec.m, spec.oat_time, 0.0);
    case SourceKind::Separable:
    default: {
      Eigen::VectorXcd c(spec.m + 1);
      for (int n = 0; n <= spec.m; ++n) c[n] = coherent_x_coeff(spec.m, n);
      return SymmetricState::from_coeffs(spec.m, std::move(c));
    }
  }
}

// -i H_src |psi> with H_src = (1/2) sum over source qubits of sigma_y.
Eigen::VectorXcd apply_imprint_generator(const Eigen::VectorXcd& psi,
                                         const ChainLayout& layout) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
  for (int q : layout.source()) {
    const Eigen::Index step = Eigen::Index{1} << q;
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
      // sigma_y |0> = i|1>, sigma_y |1> = -i|0>; scaled by -i/2 this adds
      // +1/2 amplitude flow upward and -1/2 downward.
      if ((k & step) == 0) {
        out[k | step] += 0.5 * psi[k];
        out[k] += -0.5 * psi[k | step];
      }
    }
  }
  return out;
}

}  // namespace

PureState transfer_state(const SourceSpec& source, const ChainLayout& layout,
                         const CouplingMatrix& j, double t, double theta) {
  source.validate();
  if (layout.source_size() != source.m) {
    throw ValidationError("source spec size does not match the layout");
  }
  const PureState embedded = embed_symmetric(source_state(source), layout);
  return evolve(imprint_phase(embedded, layout, theta), j, t);
}

BruteForceResult brute_force_transfer(const SourceSpec& source,
                                      const ChainLayout& layout,
                                      const CouplingMatrix& j, double t,
                                      double theta) {
  source.validate();
  if (layout.source_size() != source.m) {
    throw ValidationError("source spec size does not match the layout");
  }
  const PureState embedded = embed_symmetric(source_state(source), layout);
  const PureState imprinted = imprint_phase(embedded, layout, theta);
  const PureState psi = evolve(imprinted, j, t);

  // d/dtheta of the evolved state: the generator commutes through the
  // diagonal evolution only as an insertion before it.
  const Eigen::VectorXcd dimp =
      apply_imprint_generator(imprinted.amplitudes(), layout);
  // dimp is not normalized; route it through evolve by hand.
  const auto pairs = j.nonzero_pairs();
  Eigen::VectorXcd dpsi(dimp.size());
  for (Eigen::Index k = 0; k < dimp.size(); ++k) {
    double energy = 0.0;
    for (const auto& p : pairs) {
      const double si = ((k >> p.i) & 1) ? -1.0 : 1.0;
      const double sk = ((k >> p.k) & 1) ? -1.0 : 1.0;
      energy += p.j * si * sk;
    }
    dpsi[k] = dimp[k] * std::polar(1.0, -t * energy);
  }

  const std::vector<int> keep = {layout.antenna()};
  const DensityMatrix marginal = partial_trace(psi, keep);
  // d/dtheta of the marginal through the product rule on |psi><psi|.
  const Eigen::MatrixXcd x =
      cross_partial_trace(dpsi, psi.amplitudes(), psi.n_qubits(), keep);
  const Eigen::MatrixXcd dmarg = x + x.adjoint();

  BruteForceResult r;
  r.p = marginal.elements()(0, 0).real();
  r.a = marginal.elements()(0, 1);
  r.a_dot = dmarg(0, 1);

  ThetaFamily antenna_family;
  antenna_family.eval = [&marginal](double) { return marginal.elements(); };
  antenna_family.deriv = [&dmarg](double) { return dmarg; };
  r.qfi_antenna = qfi_eigendecomp(antenna_family, theta);
  r.qfi_source = qfi_pure(psi.amplitudes(), dpsi);
  return r;
}

BruteForceResult brute_force_transfer_fd(const SourceSpec& source,
                                         const ChainLayout& layout,
                                         const CouplingMatrix& j, double t,
                                         double theta, double fd_step) {
  auto marginal_at = [&](double th) {
    const std::vector<int> keep = {layout.antenna()};
    return partial_trace(transfer_state(source, layout, j, t, th), keep)
        .elements();
  };
  const Eigen::MatrixXcd rho = marginal_at(theta);
  const Eigen::MatrixXcd drho =
      (marginal_at(theta + fd_step) - marginal_at(theta - fd_step)) /
      (2.0 * fd_step);

  BruteForceResult r;
  r.p = rho(0, 0).real();
  r.a = rho(0, 1);
  r.a_dot = drho(0, 1);
  ThetaFamily fam;
  fam.eval = [&rho](double) { return rho; };
  fam.deriv = [&drho](double) { return drho; };
  r.qfi_antenna = qfi_eigendecomp(fam, theta);
  r.qfi_source = 0.0;  // not defined on the finite-difference path
  return r;
}

CollectiveProbs collective_probs(const SourceSpec& source) {
  source.validate();
  const SymmetricState base = source_state(source);
  CollectiveProbs cp;
  cp.probs = [base](double theta) {
    const SymmetricState rotated =
        (theta == 0.0) ? base : rotate_y(base, theta);
    return Eigen::VectorXd(rotated.coeffs().cwiseAbs2());
  };
  cp.dprobs = [base](double theta) {
    const SymmetricState rotated =
        (theta == 0.0) ? base : rotate_y(base, theta);
    const Eigen::VectorXcd c = rotated.coeffs();
    const Eigen::VectorXcd dc =
        cdouble(0.0, -1.0) * (jy_matrix(base.m()) * c);
    return Eigen::VectorXd(2.0 * c.conjugate().cwiseProduct(dc).real());
  };
  return cp;
}

}  // namespace qfic
