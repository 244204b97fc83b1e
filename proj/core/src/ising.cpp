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

#include "qfic/ising.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qfic {

ChainLayout ChainLayout::make(int n_qubits, std::vector<int> source,
                              int antenna) {
  if (n_qubits < 2) {
    throw ValidationError("chain needs at least a source and an antenna");
  }
  if (source.empty()) throw ValidationError("source set must be non-empty");
  std::sort(source.begin(), source.end());
  for (size_t i = 0; i < source.size(); ++i) {
    if (source[i] < 0 || source[i] >= n_qubits) {
      throw ValidationError("source index out of range");
    }
    if (i > 0 && source[i] == source[i - 1]) {
      throw ValidationError("duplicate source index");
    }
  }
  if (antenna < 0 || antenna >= n_qubits) {
    throw ValidationError("antenna index out of range");
  }
  if (std::binary_search(source.begin(), source.end(), antenna)) {
    throw ValidationError("antenna cannot be part of the source");
  }
  ChainLayout layout;
  layout.n_qubits_ = n_qubits;
  layout.source_ = std::move(source);
  layout.antenna_ = antenna;
  for (int q = 0; q < n_qubits; ++q) {
    if (q != antenna &&
        !std::binary_search(layout.source_.begin(), layout.source_.end(), q)) {
      layout.medium_.push_back(q);
    }
  }
  return layout;
}

CouplingMatrix CouplingMatrix::zero(int n) {
  if (n < 1) throw ValidationError("coupling matrix needs n >= 1");
  return CouplingMatrix(Eigen::MatrixXd::Zero(n, n));
}

CouplingMatrix CouplingMatrix::from_matrix(Eigen::MatrixXd j) {
  if (j.rows() != j.cols()) {
    throw ValidationError("coupling matrix must be square");
  }
  if ((j - j.transpose()).cwiseAbs().maxCoeff() != 0.0) {
    throw ValidationError("coupling matrix must be exactly symmetric");
  }
  if (j.diagonal().cwiseAbs().maxCoeff() != 0.0) {
    throw ValidationError("coupling matrix must have zero diagonal");
  }
  return CouplingMatrix(std::move(j));
}

void CouplingMatrix::set(int i, int k, double value) {
  if (i < 0 || k < 0 || i >= n() || k >= n() || i == k) {
    throw ValidationError("bad coupling pair (" + std::to_string(i) + ", " +
                          std::to_string(k) + ")");
  }
  j_(i, k) = value;
  j_(k, i) = value;
}

std::vector<CouplingMatrix::Pair> CouplingMatrix::nonzero_pairs() const {
  std::vector<Pair> pairs;
  for (int i = 1; i < n(); ++i) {
    for (int k = 0; k < i; ++k) {
      if (j_(i, k) != 0.0) pairs.push_back({i, k, j_(i, k)});
    }
  }
  return pairs;
}

CouplingMatrix expand_star(const ChainLayout& layout, const StarCouplings& s) {
  CouplingMatrix j = CouplingMatrix::zero(layout.n_qubits());
  for (int q : layout.source()) {
    j.set(q, layout.antenna(), s.j1);
  }
  for (int q : layout.medium()) {
    j.set(q, layout.antenna(), s.j2);
  }
  const auto& src = layout.source();
  for (size_t a = 0; a < src.size(); ++a) {
    for (size_t b = a + 1; b < src.size(); ++b) {
      j.set(src[a], src[b], s.u);
    }
  }
  for (int q : layout.source()) {
    for (int m : layout.medium()) j.set(q, m, s.j_bg);
  }
  const auto& med = layout.medium();
  for (size_t a = 0; a < med.size(); ++a) {
    for (size_t b = a + 1; b < med.size(); ++b) {
      j.set(med[a], med[b], s.j_bg);
    }
  }
  return j;
}

double basis_phase(const CouplingMatrix& j, Eigen::Index basis_index,
                   double t) {
  const Eigen::Index dim = Eigen::Index{1} << j.n();
  if (basis_index < 0 || basis_index >= dim) {
    throw ValidationError("basis index out of range");
  }
  double sum = 0.0;
  for (int i = 1; i < j.n(); ++i) {
    const double si = ((basis_index >> i) & 1) ? -1.0 : 1.0;
    for (int k = 0; k < i; ++k) {
      const double jik = j.j()(i, k);
      if (jik == 0.0) continue;
      const double sk = ((basis_index >> k) & 1) ? -1.0 : 1.0;
      sum += jik * si * sk;
    }
  }
  return sum * t;
}

PureState evolve(const PureState& state, const CouplingMatrix& j, double t) {
  if (j.n() != state.n_qubits()) {
    throw ValidationError("coupling matrix size does not match the register");
  }
  if (!std::isfinite(t)) throw ValidationError("evolution time must be finite");
  const auto pairs = j.nonzero_pairs();
  const Eigen::Index dim = state.dim();
  Eigen::VectorXcd out(dim);
  const Eigen::VectorXcd& in = state.amplitudes();
  for (Eigen::Index k = 0; k < dim; ++k) {
    double energy = 0.0;
    for (const auto& p : pairs) {
      const double si = ((k >> p.i) & 1) ? -1.0 : 1.0;
      const double sk = ((k >> p.k) & 1) ? -1.0 : 1.0;
      energy += p.j * si * sk;
    }
    out[k] = in[k] * std::polar(1.0, -t * energy);
  }
  return PureState::from_amplitudes(state.n_qubits(), std::move(out));
}

}  // namespace qfic
