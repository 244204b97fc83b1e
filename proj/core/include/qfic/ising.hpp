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

#ifndef QFIC_ISING_HPP_
#define QFIC_ISING_HPP_

#include <Eigen/Dense>
#include <vector>

#include "qfic/statevec.hpp"

namespace qfic {

// Partition of the chain into the M source qubits, a single antenna qubit,
// and the remaining medium. Everything is index-based; positions carry no
// geometry since the couplings are explicit.
class ChainLayout {
 public:
  static ChainLayout make(int n_qubits, std::vector<int> source, int antenna);

  int n_qubits() const { return n_qubits_; }
  const std::vector<int>& source() const { return source_; }
  int antenna() const { return antenna_; }
  const std::vector<int>& medium() const { return medium_; }
  int source_size() const { return static_cast<int>(source_.size()); }
  int medium_size() const { return static_cast<int>(medium_.size()); }

 private:
  ChainLayout() = default;
  int n_qubits_ = 0;
  std::vector<int> source_;
  int antenna_ = 0;
  std::vector<int> medium_;
};

// Symmetric coupling matrix with zero diagonal, hbar = 1. Entries have
// units of inverse time; only products J*t enter any phase.
class CouplingMatrix {
 public:
  static CouplingMatrix zero(int n);
  static CouplingMatrix from_matrix(Eigen::MatrixXd j);

  int n() const { return static_cast<int>(j_.rows()); }
  const Eigen::MatrixXd& j() const { return j_; }
  void set(int i, int k, double value);

  // Pairs (i, k, J_ik) with i > k and J_ik != 0.
  struct Pair {
    int i, k;
    double j;
  };
  std::vector<Pair> nonzero_pairs() const;

 private:
  explicit CouplingMatrix(Eigen::MatrixXd j) : j_(std::move(j)) {}
  Eigen::MatrixXd j_;
};

// The coupling symmetry the transfer protocol relies on: every source qubit
// couples to the antenna with j1, every medium qubit with j2, the source
// couples internally with u (one-axis twisting knob), and every remaining
// pair carries j_bg. j_bg provably cancels in the antenna marginal but is
// kept as a knob; the bipartite source-antenna analysis pins it to j2.
struct StarCouplings {
  double j1 = 0.0;
  double j2 = 0.0;
  double u = 0.0;
  double j_bg = 0.0;
};

CouplingMatrix expand_star(const ChainLayout& layout, const StarCouplings& s);

// Phase angle t * sum_{i>k} J_ik s_i s_k accumulated by one basis state.
double basis_phase(const CouplingMatrix& j, Eigen::Index basis_index, double t);

// Diagonal Ising evolution: multiplies each amplitude by
// exp(-i * basis_phase). Populations in the z basis are untouched.
PureState evolve(const PureState& state, const CouplingMatrix& j, double t);

}  // namespace qfic

#endif  // QFIC_ISING_HPP_
