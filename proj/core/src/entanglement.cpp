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

#include "qfic/entanglement.hpp"

#include <cmath>

namespace qfic {

BipartiteState BipartiteState::from_density(DensityMatrix rho) {
  if (rho.dim() != 4) {
    throw ValidationError("bipartite state must be 4x4");
  }
  return BipartiteState(std::move(rho));
}

BipartiteState reduce_pair(const PureState& state, const ChainLayout& layout) {
  if (layout.n_qubits() != state.n_qubits()) {
    throw ValidationError("layout does not match the register");
  }
  if (layout.source_size() != 1) {
    throw ValidationError("reduce_pair supports single-qubit sources only");
  }
  const int src = layout.source()[0];
  const int an = layout.antenna();
  std::vector<int> keep = {std::min(src, an), std::max(src, an)};
  const DensityMatrix traced = partial_trace(state, keep);

  // Reorder into the |s_src, s_an> basis with -1 listed first. In the
  // traced matrix, result bit j corresponds to keep[j] with bit 0 <-> +1.
  const int src_slot = (keep[0] == src) ? 0 : 1;
  const int an_slot = 1 - src_slot;
  auto traced_index = [&](int row) {
    // row: 2*(source part) + (antenna part), 0 <-> -1, 1 <-> +1
    const int s_src_bit = ((row >> 1) & 1) ? 0 : 1;  // +1 -> bit 0
    const int s_an_bit = (row & 1) ? 0 : 1;
    return (s_src_bit << src_slot) | (s_an_bit << an_slot);
  };
  Eigen::MatrixXcd reordered(4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      reordered(r, c) = traced.elements()(traced_index(r), traced_index(c));
    }
  }
  return BipartiteState::from_density(
      DensityMatrix::from_matrix(std::move(reordered)));
}

Eigen::Matrix4cd partial_transpose(const BipartiteState& b,
                                   PairSubsystem subsystem) {
  const Eigen::MatrixXcd& rho = b.rho().elements();
  Eigen::Matrix4cd out;
  for (int s1 = 0; s1 < 2; ++s1) {
    for (int a1 = 0; a1 < 2; ++a1) {
      for (int s2 = 0; s2 < 2; ++s2) {
        for (int a2 = 0; a2 < 2; ++a2) {
          const int r = 2 * s1 + a1;
          const int c = 2 * s2 + a2;
          const int rt = (subsystem == PairSubsystem::Second)
                             ? 2 * s1 + a2
                             : 2 * s2 + a1;
          const int ct = (subsystem == PairSubsystem::Second)
                             ? 2 * s2 + a1
                             : 2 * s1 + a2;
          out(r, c) = rho(rt, ct);
        }
      }
    }
  }
  return out;
}

double negativity(const BipartiteState& b) {
  const Eigen::Matrix4cd pt = partial_transpose(b, PairSubsystem::Second);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(pt,
                                                     Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalError("partial transpose eigendecomposition failed");
  }
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double lam = es.eigenvalues()[i];
    if (lam < -kSupportCutoff) total += -lam;
  }
  return total;
}

double negativity_closed_form(double t, int n, double qfi_an) {
  if (n < 3) throw ValidationError("closed form needs n >= 3");
  if (qfi_an < 0.0) throw ValidationError("qfi_an must be non-negative");
  double c4 = 1.0;
  for (int k = 0; k < n - 2; ++k) c4 *= std::cos(4.0 * t);
  const double alpha = 1.0 - c4;
  return 0.125 * (std::sqrt(alpha * alpha + 16.0 * qfi_an) - alpha);
}

double pinned_protocol_qfi(double t, int n) {
  if (n < 2) throw ValidationError("pinned protocol needs n >= 2");
  double c2 = 1.0;
  for (int k = 0; k < n - 2; ++k) c2 *= std::cos(2.0 * t);
  const double s = std::sin(t);
  return s * s * c2 * c2;
}

ChainLayout pinned_protocol_layout(int n) {
  return ChainLayout::make(n, {0}, n - 1);
}

CouplingMatrix pinned_protocol_couplings(int n) {
  // Source-antenna 1/2, everything else coupled at J2 = 1. The uniform
  // background is part of the protocol: the bipartite reduced matrix (and
  // hence the closed-form negativity) depends on the source-medium
  // coupling even though the antenna marginal does not.
  const ChainLayout layout = pinned_protocol_layout(n);
  StarCouplings star;
  star.j1 = 0.5;
  star.j2 = 1.0;
  star.u = 0.0;
  star.j_bg = 1.0;
  return expand_star(layout, star);
}

}  // namespace qfic
